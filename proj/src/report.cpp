#include "jumpnum/report.hpp"

#include <sstream>

#include "jumpnum/candidates.hpp"
#include "jumpnum/lattice.hpp"
#include "jumpnum/surface.hpp"
#include "jumpnum/validate.hpp"

namespace jumpnum {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string join(const std::vector<Rational>& items) {
  std::vector<std::string> s;
  for (const auto& r : items) s.push_back(r.str());
  return join(s, ", ");
}

std::vector<std::string> weights_text(const EffectivityResult& eff) {
  std::vector<std::string> terms;
  for (std::size_t g = 0; g < eff.weights.size(); ++g) {
    if (eff.weights[g].is_zero()) continue;
    terms.push_back(eff.weights[g].str() + "*(" + to_string(eff.cone.generators[g]) + ")");
  }
  return terms;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Json effectivity_json(const EffectivityResult& eff) {
  Json gens = Json::array();
  for (const auto& g : eff.cone.generators) gens.push_back(g.coeffs);
  return {{"status", to_string(eff.status)}, {"cone", to_string(eff.cone.source)}, {"generators", gens},
          {"weights", rationals_json(eff.weights)}};
}

// the DOT language needs quoted ids for anything beyond [A-Za-z0-9_]
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_verdict(const ContributionVerdict& v) {
  std::ostringstream os;
  os << "divisor: " << join(v.divisors, ",") << "\n";
  os << "lambda: " << v.lambda << "\n";
  os << "verdict: " << to_string(v.verdict) << "\n";
  os << "method: " << to_string(v.method) << "\n";
  const auto& ev = v.evidence;
  if (ev.canonical) os << "K_E: " << to_string(*ev.canonical) << "\n";
  if (ev.floor_restriction) os << "floor(lambda pi*D)|_E: " << to_string(*ev.floor_restriction) << "\n";
  if (ev.tested_class) os << "class: " << to_string(*ev.tested_class) << "\n";
  if (ev.effectivity) {
    os << "effective: " << to_string(ev.effectivity->status) << " (cone " << to_string(ev.effectivity->cone.source) << ")\n";
    if (ev.effectivity->status == Effectivity::yes) {
      const auto terms = weights_text(*ev.effectivity);
      os << "certificate: " << (terms.empty() ? std::string("empty combination") : join(terms, " + ")) << "\n";
    }
  }
  if (ev.surface) {
    std::vector<std::string> degs;
    for (auto d : ev.surface->degrees) degs.push_back(std::to_string(d));
    os << "component degrees of K_E - floor(lambda pi*C)|_E: " << join(degs, ", ") << "\n";
    if (!ev.surface->witness.empty()) os << "witness: " << join(ev.surface->witness, ",") << "\n";
  }
  if (ev.input) {
    os << "input: n=" << ev.input->n << " d=" << ev.input->d << " a=" << ev.input->a;
    for (const auto& c : ev.input->centers) os << " mu_" << c.label << "=" << c.mu;
    os << "\n";
  }
  for (const auto& c : ev.checks) os << "check: " << c << "\n";
  if (!v.note.empty()) os << "note: " << v.note << "\n";
  return os.str();
}

Json verdict_json(const ContributionVerdict& v) {
  Json out = {{"divisors", v.divisors}, {"lambda", v.lambda.str()}, {"verdict", to_string(v.verdict)},
              {"method", to_string(v.method)}};
  Json ev = Json::object();
  if (v.evidence.canonical) ev["canonical"] = v.evidence.canonical->coeffs;
  if (v.evidence.floor_restriction) ev["floor_restriction"] = v.evidence.floor_restriction->coeffs;
  if (v.evidence.tested_class) ev["class"] = v.evidence.tested_class->coeffs;
  if (v.evidence.effectivity) ev["effectivity"] = effectivity_json(*v.evidence.effectivity);
  if (v.evidence.surface) {
    ev["degrees"] = v.evidence.surface->degrees;
    ev["witness"] = v.evidence.surface->witness;
  }
  if (v.evidence.input) {
    Json mus = Json::object();
    for (const auto& c : v.evidence.input->centers) mus[c.label] = c.mu;
    ev["input"] = {{"n", v.evidence.input->n}, {"d", v.evidence.input->d}, {"a", v.evidence.input->a}, {"mu", mus}};
  }
  if (!v.evidence.checks.empty()) ev["checks"] = v.evidence.checks;
  out["evidence"] = std::move(ev);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

std::string format_criteria(const std::string& e, const CriteriaReport& rep) {
  std::ostringstream os;
  os << "divisor: " << e << "\n";
  os << "input: n=" << rep.input.n << " d=" << rep.input.d << " a=" << rep.input.a;
  for (const auto& c : rep.input.centers) os << " mu_" << c.label << "=" << c.mu << " (k=" << c.k << ")";
  os << "\n";
  os << "criterion: " << (rep.criterion ? to_string(*rep.criterion) : std::string("none")) << "\n";
  os << "reason: " << rep.reason << "\n";
  if (rep.result) {
    os << "outcome: " << to_string(rep.result->outcome) << "\n";
    for (const auto& c : rep.result->checks) os << "check: " << c << "\n";
  }
  os << "necessary condition: " << to_string(rep.necessary.status) << " (K_E + E°|_E = " << to_string(rep.necessary.cls)
     << ")";
  if (!rep.necessary.note.empty()) os << " " << rep.necessary.note;
  os << "\n";
  return os.str();
}

namespace {

struct LatticeAnalysis {
  std::string id;
  PicClass canonical;
  std::optional<PicClass> self;
  CriteriaReport criteria;
  std::vector<std::pair<std::string, ContractionResult>> families;
  std::vector<ContributionVerdict> verdicts;
  std::vector<std::string> errors;
};

LatticeAnalysis analyse_lattice(const ResolutionData& data, const std::string& id) {
  LatticeAnalysis out;
  out.id = id;
  const auto& lat = data.lattice(id);
  out.canonical = canonical_class(lat);
  try {
    out.self = self_class(data, id);
  } catch (const std::exception& e) {
    out.errors.push_back(e.what());
  }
  out.criteria = criteria_report(data, id);
  for (const auto& f : lat.curve_families) out.families.emplace_back(f.name, contraction_sufficiency(data, id, f.name, false));
  for (const auto& lambda : candidates_of(data.divisor(id), Rational(1))) {
    try {
      out.verdicts.push_back(contributes(data, {id}, lambda));
    } catch (const std::exception& e) {
      out.errors.push_back("lambda " + lambda.str() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

std::string report_text(const ResolutionData& data) {
  std::ostringstream os;
  if (!data.provenance.empty()) os << "provenance: " << data.provenance << "\n";
  os << "ambient dimension: " << data.ambient_dim << "\n\ndivisors:\n";
  for (const auto& d : data.divisors) {
    os << "  " << d.id << " (" << d.name << ", " << to_string(d.kind) << "): a=" << d.mult << " k=" << d.discrepancy
       << " (k+1)/a=" << Rational(d.discrepancy + 1, d.mult) << "\n";
  }
  const auto [t, achievers] = lct(data);
  os << "\nlct: " << t << " (" << join(std::vector<std::string>(achievers.begin(), achievers.end()), ", ") << ")\n";
  os << "candidates in (0,1]:";
  for (const auto& e : candidates(data, Rational(1)).entries) {
    os << " " << e.lambda << "[" << join(std::vector<std::string>(e.supporters.begin(), e.supporters.end()), ",") << "]";
  }
  os << "\n";

  if (data.is_surface()) {
    os << "\nexceptional curves:\n";
    for (const auto& p : surface_profiles(data)) {
      os << "  " << p.id << ": a=" << p.a << " k=" << p.k << " E^2=" << p.self_int << " d=" << p.d << "\n";
    }
    os << "jumping numbers in (0,1]: " << join(surface_jumping_numbers(data, Rational(1))) << "\n";
    if (data.flags.minimal_resolution) {
      os << "d >= 3 report (minimal resolution asserted):\n";
      for (const auto& r : degree_report(data)) {
        os << "  " << r.id << ": d=" << r.d << (r.contributes ? " contributes " + r.number.str() : " contributes nothing")
           << "\n";
      }
    }
    for (const auto& p : surface_profiles(data)) {
      const Rational top = Rational(1) - Rational(1, p.a);
      if (top.sign() <= 0) continue;
      os << "  " << p.id << " at 1-1/a=" << top << ": " << to_string(surface_contributes(data, {p.id}, top).verdict)
         << "\n";
    }
  }

  for (const auto& [id, lat] : data.lattices) {
    (void)lat;
    const auto la = analyse_lattice(data, id);
    os << "\nlattice of " << id << ":\n";
    os << "  K_E = " << to_string(la.canonical) << "\n";
    if (la.self) os << "  E|_E = " << to_string(*la.self) << "\n";
    std::istringstream crit(format_criteria(id, la.criteria));
    for (std::string line; std::getline(crit, line);) os << "  " << line << "\n";
    for (const auto& [name, c] : la.families) {
      os << "  (K_E + E°|_E).C for " << name << " = " << c.pairing << (c.fires ? " (contraction fires)" : "") << "\n";
    }
    for (const auto& v : la.verdicts) {
      os << "  lambda " << v.lambda << ": " << to_string(v.verdict) << " by " << to_string(v.method);
      if (v.evidence.tested_class) os << " (class " << to_string(*v.evidence.tested_class) << ")";
      os << "\n";
    }
    for (const auto& e : la.errors) os << "  error: " << e << "\n";
  }
  return os.str();
}

Json report_json(const ResolutionData& data) {
  Json doc = fixture_to_json(data);
  Json analysis = Json::object();
  const auto [t, achievers] = lct(data);
  analysis["lct"] = {{"value", t.str()}, {"divisors", std::vector<std::string>(achievers.begin(), achievers.end())}};
  Json cands = Json::array();
  for (const auto& e : candidates(data, Rational(1)).entries) {
    cands.push_back({{"lambda", e.lambda.str()},
                     {"supporters", std::vector<std::string>(e.supporters.begin(), e.supporters.end())}});
  }
  analysis["candidates"] = std::move(cands);
  if (data.is_surface()) {
    Json profiles = Json::array();
    for (const auto& p : surface_profiles(data)) {
      profiles.push_back({{"id", p.id}, {"a", p.a}, {"k", p.k}, {"self_intersection", p.self_int}, {"d", p.d}});
    }
    analysis["exceptional_curves"] = std::move(profiles);
    analysis["jumping_numbers"] = rationals_json(surface_jumping_numbers(data, Rational(1)));
    if (data.flags.minimal_resolution) {
      Json rows = Json::array();
      for (const auto& r : degree_report(data)) {
        rows.push_back({{"id", r.id}, {"d", r.d}, {"contributes", r.contributes}, {"number", r.number.str()}});
      }
      analysis["d_at_least_3"] = std::move(rows);
    }
  }
  Json lats = Json::object();
  for (const auto& [id, lat] : data.lattices) {
    (void)lat;
    const auto la = analyse_lattice(data, id);
    Json l = {{"canonical", la.canonical.coeffs}};
    if (la.self) l["self_restriction"] = la.self->coeffs;
    Json mus = Json::object();
    for (const auto& c : la.criteria.input.centers) mus[c.label] = c.mu;
    l["criterion_input"] = {{"n", la.criteria.input.n}, {"d", la.criteria.input.d}, {"a", la.criteria.input.a}, {"mu", mus}};
    l["criterion"] = la.criteria.criterion ? to_string(*la.criteria.criterion) : "none";
    if (la.criteria.result) l["criterion_outcome"] = to_string(la.criteria.result->outcome);
    l["necessary_condition"] = {{"status", to_string(la.criteria.necessary.status)},
                                {"class", la.criteria.necessary.cls.coeffs}};
    Json fams = Json::object();
    for (const auto& [name, c] : la.families) fams[name] = {{"pairing", c.pairing.str()}, {"fires_non_strict", c.fires}};
    l["curve_pairings"] = std::move(fams);
    Json verdicts = Json::array();
    for (const auto& v : la.verdicts) verdicts.push_back(verdict_json(v));
    l["verdicts"] = std::move(verdicts);
    if (!la.errors.empty()) l["errors"] = la.errors;
    lats[id] = std::move(l);
  }
  if (!lats.empty()) analysis["lattices"] = std::move(lats);
  doc["analysis"] = std::move(analysis);
  return doc;
}

std::string report_dot(const ResolutionData& data) {
  std::ostringstream os;
  if (data.is_surface() && data.dual_graph) {
    os << "graph dual_graph {\n";
    for (const auto& d : data.divisors) {
      os << "  " << quoted(d.id) << " [label=" << quoted(d.id + " a=" + std::to_string(d.mult) + " k=" +
                                                        std::to_string(d.discrepancy))
         << (d.is_exceptional() ? "" : ", shape=box") << "];\n";
    }
    for (const auto& e : *data.dual_graph) {
      os << "  " << quoted(e.a) << " -- " << quoted(e.b) << " [label=" << quoted(std::to_string(e.intersection)) << "];\n";
    }
    os << "}\n";
    return os.str();
  }
  os << "digraph lattices {\n";
  for (const auto& [id, lat] : data.lattices) {
    os << "  subgraph " << quoted("cluster_" + id) << " {\n    label=" << quoted(id + " (n=" + std::to_string(lat.n) + ")")
       << ";\n";
    for (const auto& c : lat.centers) {
      os << "    " << quoted(id + ":" + c.label) << " [label=" << quoted(c.label + " dim " + std::to_string(c.dim))
         << ", shape=circle];\n";
    }
    for (const auto& [other, cls] : lat.restrictions) {
      os << "    " << quoted(id + "/" + other) << " [label=" << quoted(other + " | " + to_string(cls)) << ", shape=box];\n";
    }
    for (const auto& c : lat.centers) {
      os << "    " << quoted(id + "/" + c.divisor) << " -> " << quoted(id + ":" + c.label) << " [label=\"cuts\"];\n";
      for (const auto& p : c.proximities()) {
        os << "    " << quoted(id + ":" + c.label) << " -> " << quoted(id + ":" + p) << " [label=\"proximate\"];\n";
      }
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace jumpnum

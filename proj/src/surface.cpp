#include "jumpnum/surface.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "jumpnum/candidates.hpp"
#include "jumpnum/validate.hpp"

namespace jumpnum {

namespace {

void require_surface(const ResolutionData& data) {
  if (!data.is_surface()) {
    throw DomainError("operation needs a surface resolution, fixture has ambient_dim " + std::to_string(data.ambient_dim));
  }
  if (!data.dual_graph) throw ConfigurationError("surface resolution without a dual graph");
}

std::int64_t coeff(const SurfaceDivisor& d, const std::string& id) {
  auto it = d.find(id);
  return it == d.end() ? 0 : it->second;
}

}  // namespace

std::vector<SurfaceProfile> surface_profiles(const ResolutionData& data) {
  require_surface(data);
  const auto self = self_intersections(data);
  std::vector<SurfaceProfile> out;
  for (const auto& e : data.divisors) {
    if (!e.is_exceptional()) continue;
    SurfaceProfile p{e.id, e.mult, e.discrepancy, self.at(e.id), 0};
    for (const auto& edge : *data.dual_graph) {
      if (edge.a == e.id || edge.b == e.id) p.d += edge.intersection;
    }
    out.push_back(p);
  }
  return out;
}

std::int64_t pairing(const ResolutionData& data, const std::map<std::string, std::int64_t>& self_int,
                     const SurfaceDivisor& div, const std::string& e) {
  std::int64_t sum = coeff(div, e) * self_int.at(e);
  for (const auto& f : data.divisors) {
    if (f.id == e) continue;
    sum += coeff(div, f.id) * edge_intersection(data, f.id, e);
  }
  return sum;
}

AntinefClosure unloading_closure(const ResolutionData& data, const SurfaceDivisor& div, std::size_t cap) {
  require_surface(data);
  if (!is_negative_definite(exceptional_intersection_matrix(data))) {
    throw DomainError("exceptional intersection matrix is not negative definite");
  }
  const auto self = self_intersections(data);
  const auto ids = exceptional_ids(data);
  AntinefClosure out{div, 0};
  for (const auto& d : data.divisors) out.divisor.try_emplace(d.id, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : ids) {
      const std::int64_t t = pairing(data, self, out.divisor, e);
      if (t <= 0) continue;
      const std::int64_t neg = -self.at(e);
      out.divisor[e] += (t + neg - 1) / neg;
      changed = true;
      if (++out.steps > cap) throw DomainError("unloading did not terminate within the iteration cap");
    }
  }
  for (const auto& e : ids) {
    if (pairing(data, self, out.divisor, e) > 0) throw std::logic_error("unloading result is not antinef at " + e);
  }
  return out;
}

SurfaceDivisor ideal_divisor(const ResolutionData& data, const Rational& lambda) {
  SurfaceDivisor out;
  for (const auto& d : data.divisors) out[d.id] = (lambda * Rational(d.mult)).floor().to_int64() - d.discrepancy;
  return out;
}

std::vector<std::pair<Rational, SurfaceDivisor>> closure_walk(const ResolutionData& data, const Rational& upper) {
  require_surface(data);
  std::vector<std::pair<Rational, SurfaceDivisor>> out;
  for (const auto& entry : candidates(data, upper).entries) {
    out.emplace_back(entry.lambda, unloading_closure(data, ideal_divisor(data, entry.lambda)).divisor);
  }
  return out;
}

std::vector<Rational> surface_jumping_numbers(const ResolutionData& data, const Rational& upper) {
  require_surface(data);
  SurfaceDivisor previous = unloading_closure(data, ideal_divisor(data, Rational(0))).divisor;
  std::vector<Rational> out;
  for (auto& [lambda, closure] : closure_walk(data, upper)) {
    if (closure != previous || lambda.is_integer()) out.push_back(lambda);
    previous = std::move(closure);
  }
  // integers are jumping numbers even when no declared divisor proposes them
  for (std::int64_t m = 1; Rational(m) <= upper; ++m) {
    if (!std::binary_search(out.begin(), out.end(), Rational(m))) {
      out.insert(std::lower_bound(out.begin(), out.end(), Rational(m)), Rational(m));
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::contributes: return "contributes";
    case Verdict::does_not_contribute: return "does-not-contribute";
    case Verdict::undecidable: return "undecidable-with-given-data";
  }
  return "undecidable-with-given-data";
}

SurfaceVerdict surface_contributes(const ResolutionData& data, const std::vector<std::string>& ids,
                                   const Rational& lambda) {
  require_surface(data);
  if (ids.empty()) throw PreconditionError("no divisor given");
  std::set<std::string> members(ids.begin(), ids.end());
  if (members.size() != ids.size()) throw PreconditionError("repeated divisor in component list");
  for (const auto& id : ids) {
    const auto& e = data.divisor(id);
    if (!e.is_exceptional()) throw PreconditionError(id + " is not exceptional");
    if (!is_candidate_for(e, lambda)) {
      throw PreconditionError("lambda = " + lambda.str() + " is not a candidate for " + id + " (lambda * a = " +
                              (lambda * Rational(e.mult)).str() + ")");
    }
  }
  const auto self = self_intersections(data);
  SurfaceDivisor floor_div;
  for (const auto& d : data.divisors) floor_div[d.id] = (lambda * Rational(d.mult)).floor().to_int64();

  // degree of K_E - floor(lambda pi*C)|_E on each component; K_E has degree -2 + (nodes inside E)
  SurfaceVerdict out;
  std::vector<std::int64_t> inner(ids.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i != j) inner[i] += edge_intersection(data, ids[i], ids[j]);
    }
    out.degrees.push_back(-2 + inner[i] - pairing(data, self, floor_div, ids[i]));
  }

  if (ids.size() == 1) {
    out.verdict = out.degrees[0] >= 0 ? Verdict::contributes : Verdict::does_not_contribute;
    out.detail = "deg floor(lambda pi*C)|_" + ids[0] + " = " + std::to_string(-2 - out.degrees[0]) +
                 (out.verdict == Verdict::contributes ? " <= -2" : " > -2");
    if (out.verdict == Verdict::contributes) out.witness = ids;
    return out;
  }

  // order the components along the chain
  std::vector<std::vector<std::size_t>> adj(ids.size());
  std::size_t edges = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const auto w = edge_intersection(data, ids[i], ids[j]);
      if (w == 0) continue;
      if (w != 1) {
        out.detail = "components " + ids[i] + " and " + ids[j] + " meet with multiplicity " + std::to_string(w);
        return out;
      }
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }
  }
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (adj[i].size() > 2) {
      out.detail = "components do not form a chain";
      return out;
    }
    if (adj[i].size() <= 1 && !start) start = i;
  }
  if (edges != ids.size() - 1 || !start) {
    out.detail = "components do not form a connected chain";
    return out;
  }
  std::vector<std::size_t> chain{*start};
  while (chain.size() < ids.size()) {
    const std::size_t cur = chain.back();
    const std::size_t prev = chain.size() > 1 ? chain[chain.size() - 2] : ids.size();
    bool advanced = false;
    for (auto nb : adj[cur]) {
      if (nb != prev) {
        chain.push_back(nb);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      out.detail = "components do not form a connected chain";
      return out;
    }
  }

  std::vector<std::int64_t> ordered;
  for (auto i : chain) ordered.push_back(out.degrees[i]);
  if (auto span = chain_section_support(ordered)) {
    out.verdict = Verdict::contributes;
    for (std::size_t p = span->first; p <= span->second; ++p) out.witness.push_back(ids[chain[p]]);
    out.detail = "sub-chain carries a nonzero section";
  } else {
    out.verdict = Verdict::does_not_contribute;
    out.detail = "no sub-chain carries a nonzero section";
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> chain_section_support(const std::vector<std::int64_t>& degrees) {
  // a nonzero section lives on some sub-chain T, vanishing at the nodes where T meets the rest
  const std::size_t n = degrees.size();
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = lo; hi < n; ++hi) {
      bool ok = true;
      for (std::size_t p = lo; p <= hi && ok; ++p) {
        const std::int64_t cut = (p == lo && lo > 0 ? 1 : 0) + (p == hi && hi + 1 < n ? 1 : 0);
        ok = degrees[p] >= cut;
      }
      if (ok) return std::pair{lo, hi};
    }
  }
  return std::nullopt;
}

std::vector<DegreeRecord> degree_report(const ResolutionData& data) {
  require_surface(data);
  if (!data.flags.minimal_resolution) {
    throw PreconditionError("the d >= 3 report needs a resolution flagged minimal (flags.minimal_resolution)");
  }
  std::vector<DegreeRecord> out;
  for (const auto& p : surface_profiles(data)) {
    out.push_back({p.id, p.d, p.a, p.d >= 3, Rational(1) - Rational(1, p.a)});
  }
  return out;
}

ResolutionData monomial_curve_resolution(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) {
    throw PreconditionError("x^p = y^q needs coprime p, q >= 2");
  }
  ResolutionData data;
  data.ambient_dim = 2;
  data.flags.minimal_resolution = true;
  data.provenance = "minimal embedded resolution of x^" + std::to_string(p) + " = y^" + std::to_string(q) +
                    " built by tracking the local form x^alpha = y^beta through each point blow-up";
  data.divisors.push_back({"C", "strict transform of x^" + std::to_string(p) + " = y^" + std::to_string(q), 1, 0,
                           DivisorKind::strict_transform});
  std::vector<DualGraphEdge> edges;
  auto drop_edge = [&](const std::string& a, const std::string& b) {
    std::erase_if(edges, [&](const DualGraphEdge& e) { return (e.a == a && e.b == b) || (e.a == b && e.b == a); });
  };
  auto mult = [&](const std::optional<std::size_t>& i) { return i ? data.divisors[*i].mult : 0; };
  auto disc = [&](const std::optional<std::size_t>& i) { return i ? data.divisors[*i].discrepancy : 0; };

  std::int64_t alpha = p, beta = q;
  std::optional<std::size_t> ax, ay;  // divisors {x = 0} and {y = 0} through the current point
  for (;;) {
    const bool smooth = std::min(alpha, beta) == 1;
    const int axes = (ax ? 1 : 0) + (ay ? 1 : 0);
    const bool transversal = (!ax || beta == 1) && (!ay || alpha == 1);
    if (smooth && axes <= 1 && transversal) break;

    const std::size_t idx = data.divisors.size();
    const std::string id = "E" + std::to_string(idx);
    data.divisors.push_back({id, id, std::min(alpha, beta) + mult(ax) + mult(ay), 1 + disc(ax) + disc(ay),
                             DivisorKind::exceptional});
    if (ax && ay) drop_edge(data.divisors[*ax].id, data.divisors[*ay].id);
    if (ax) edges.push_back({data.divisors[*ax].id, id, 1});
    if (ay) edges.push_back({data.divisors[*ay].id, id, 1});

    if (alpha == 1 && beta == 1) {
      // the curve now crosses the new curve alone, away from the old ones
      ax.reset();
      ay = idx;
      break;
    }
    if (alpha < beta) {
      beta -= alpha;
      ay = idx;
    } else {
      alpha -= beta;
      ax = idx;
    }
  }
  const std::size_t last = ax ? *ax : *ay;
  edges.push_back({data.divisors[last].id, "C", 1});
  data.dual_graph = std::move(edges);
  return data;
}

}  // namespace jumpnum

#include "jumpnum/contribution.hpp"

#include <algorithm>
#include <set>

#include "jumpnum/candidates.hpp"

namespace jumpnum {

std::string to_string(Method m) {
  switch (m) {
    case Method::surface_degree: return "surface-degree";
    case Method::lattice_effectivity: return "lattice-effectivity";
    case Method::criterion_pn: return "criterion-Pn";
    case Method::criterion_pn_centers: return "criterion-Pn-centers";
    case Method::criterion_two_infinitely_near: return "criterion-two-infinitely-near";
    case Method::necessary_condition_failed: return "necessary-condition-failed";
  }
  return "lattice-effectivity";
}

std::string to_string(CriterionOutcome o) {
  switch (o) {
    case CriterionOutcome::contributes: return "contributes-1-minus-1-over-a";
    case CriterionOutcome::contracted: return "contracted-in-lc-model";
    case CriterionOutcome::open_zone: return "open-zone";
  }
  return "open-zone";
}

std::string to_string(Necessary n) {
  switch (n) {
    case Necessary::passes: return "passes";
    case Necessary::fails: return "fails";
    case Necessary::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool check(std::vector<std::string>& log, const std::string& lhs_text, std::int64_t lhs, const std::string& op,
           const std::string& rhs_text, std::int64_t rhs) {
  bool ok = false;
  if (op == ">=") ok = lhs >= rhs;
  else if (op == "<=") ok = lhs <= rhs;
  else if (op == "=") ok = lhs == rhs;
  const std::string rhs_value = std::to_string(rhs);
  log.push_back(lhs_text + " = " + std::to_string(lhs) + " " + op + " " + rhs_text +
                (rhs_text == rhs_value ? "" : " = " + rhs_value) + (ok ? ": holds" : ": fails"));
  return ok;
}

const PrimeDivisor& exceptional(const ResolutionData& data, const std::string& e) {
  const auto& d = data.divisor(e);
  if (!d.is_exceptional()) throw PreconditionError(e + " is a strict transform, not an exceptional divisor");
  return d;
}

std::set<std::string> center_divisors(const ExcDivLattice& lat) {
  std::set<std::string> out;
  for (const auto& c : lat.centers) out.insert(c.divisor);
  return out;
}

PicClass log_canonical_restriction(const ResolutionData& data, const std::string& e) {
  const auto& lat = data.lattice(e);
  PicClass cls = canonical_class(lat);
  for (const auto& [id, r] : lat.restrictions) {
    if (id != e) cls += r;
  }
  return cls;
}

}  // namespace

CriterionResult criterion_pn(std::int64_t n, std::int64_t d) {
  CriterionResult r;
  r.outcome = check(r.checks, "d", d, ">=", "n + 1", n + 1) ? CriterionOutcome::contributes : CriterionOutcome::contracted;
  return r;
}

CriterionResult criterion_pn_centers(std::int64_t n, std::int64_t d, const std::vector<CenterInput>& centers) {
  CriterionResult r;
  bool ok = check(r.checks, "d", d, ">=", "n + 1", n + 1);
  for (const auto& c : centers) {
    ok = check(r.checks, "d - mu_" + c.label, d - c.mu, ">=", "k_" + c.label + " + 2", c.k + 2) && ok;
  }
  r.outcome = ok ? CriterionOutcome::contributes : CriterionOutcome::contracted;
  return r;
}

CriterionResult classify_two_infinitely_near(std::int64_t d, std::int64_t mu1, std::int64_t mu2) {
  CriterionResult r;
  const bool line = check(r.checks, "d", d, ">=", "4", 4);
  const bool through_first = check(r.checks, "d - mu_1", d - mu1, ">=", "2", 2);
  const std::int64_t conic = 2 * d - mu1 - mu2;
  const bool conic_ok = check(r.checks, "2d - mu_1 - mu_2", conic, ">=", "5", 5);
  if (line && through_first && conic_ok) {
    r.outcome = CriterionOutcome::contributes;
  } else if (!line || !through_first || conic <= 3) {
    r.outcome = CriterionOutcome::contracted;
  } else {
    r.outcome = CriterionOutcome::open_zone;
  }
  return r;
}

CriterionInput criterion_input(const ResolutionData& data, const std::string& e) {
  const auto& owner = exceptional(data, e);
  const auto& lat = data.lattice(e);
  CriterionInput in;
  in.n = lat.n;
  in.a = owner.mult;
  for (const auto& c : lat.centers) in.centers.push_back({c.label, c.dim, 0});
  const auto centers = center_divisors(lat);
  for (const auto& [id, r] : lat.restrictions) {
    if (id == e || centers.contains(id)) continue;
    in.d += r.coeffs[0];
    for (std::size_t l = 0; l < lat.centers.size(); ++l) in.centers[l].mu -= r.coeffs[l + 1];
  }
  return in;
}

ContributionVerdict contributes_by_effectivity(const ResolutionData& data, const std::string& e, const Rational& lambda) {
  exceptional(data, e);
  const auto& lat = data.lattice(e);
  ContributionVerdict v;
  v.divisors = {e};
  v.lambda = lambda;
  v.method = Method::lattice_effectivity;
  const PicClass k = canonical_class(lat);
  const PicClass fl = floor_pullback_restriction(data, e, lambda);
  const PicClass cls = k - fl;
  auto eff = is_effective(lat, cls);
  v.evidence.canonical = k;
  v.evidence.floor_restriction = fl;
  v.evidence.tested_class = cls;
  switch (eff.status) {
    case Effectivity::yes: v.verdict = Verdict::contributes; break;
    case Effectivity::no: v.verdict = Verdict::does_not_contribute; break;
    case Effectivity::unknown:
      v.verdict = Verdict::undecidable;
      v.note = "no effective-cone generators are declared for this configuration";
      break;
  }
  v.evidence.effectivity = std::move(eff);
  return v;
}

NecessaryResult necessary_condition(const ResolutionData& data, const std::string& e) {
  exceptional(data, e);
  const auto& lat = data.lattice(e);
  NecessaryResult r;
  r.cls = log_canonical_restriction(data, e);
  r.effectivity = is_effective(lat, r.cls);
  if (!lat.flags.effectivity_as_Q_divisor) {
    r.status = Necessary::unknown;
    r.note = "lattice is not flagged effectivity_as_Q_divisor";
    return r;
  }
  if (r.cls.is_zero()) {
    r.status = Necessary::fails;
    r.note = "K_E + E°|_E is zero";
  } else if (r.effectivity.status == Effectivity::yes) {
    r.status = Necessary::passes;
  } else if (r.effectivity.status == Effectivity::no) {
    r.status = Necessary::fails;
    r.note = "K_E + E°|_E is not effective";
  } else {
    r.status = Necessary::unknown;
    r.note = "no effective-cone generators are declared for this configuration";
  }
  return r;
}

ContractionResult contraction_sufficiency(const ResolutionData& data, const std::string& e, const std::string& family,
                                          bool strict) {
  exceptional(data, e);
  const auto& lat = data.lattice(e);
  const CurveFamily* fam = lat.family(family);
  if (!fam) throw ConfigurationError("lattice of " + e + " declares no curve family named '" + family + "'");
  ContractionResult r;
  r.cls = log_canonical_restriction(data, e);
  r.pairing = pair(r.cls, *fam);
  r.fires = strict ? r.pairing.sign() < 0 : r.pairing.sign() <= 0;
  return r;
}

CriteriaReport criteria_report(const ResolutionData& data, const std::string& e) {
  exceptional(data, e);
  const auto& lat = data.lattice(e);
  CriteriaReport rep;
  rep.input = criterion_input(data, e);
  rep.necessary = necessary_condition(data, e);
  const auto& cs = lat.centers;
  const bool distinct = std::all_of(cs.begin(), cs.end(), [](const Center& c) { return c.proximities().empty(); });
  if (cs.empty()) {
    if (lat.flags.created_by_point_blowup) {
      rep.criterion = Method::criterion_pn;
      rep.reason = "E is P^" + std::to_string(lat.n - 1) + " created by a point blow-up";
      rep.result = criterion_pn(rep.input.n, rep.input.d);
    } else {
      rep.reason = "E has no centers but is not flagged created_by_point_blowup";
    }
  } else if (distinct && lat.flags.created_by_point_blowup && lat.flags.centers_in_hyperplane) {
    rep.criterion = Method::criterion_pn_centers;
    rep.reason = "E is P^" + std::to_string(lat.n - 1) + " blown up at disjoint centers in one hyperplane";
    rep.result = criterion_pn_centers(rep.input.n, rep.input.d, rep.input.centers);
  } else if (lat.n == 3 && cs.size() == 2 && cs[0].dim == 0 && cs[1].dim == 0 && cs[0].proximities().empty() &&
             cs[1].infinitely_near_parent == cs[0].label && cs[1].proximate_to.empty()) {
    rep.criterion = Method::criterion_two_infinitely_near;
    rep.reason = "E is P^2 blown up at two infinitely near points";
    rep.result = classify_two_infinitely_near(rep.input.d, rep.input.centers[0].mu, rep.input.centers[1].mu);
  } else {
    rep.reason = "no closed-form criterion covers this center configuration";
  }
  return rep;
}

ContributionVerdict contributes(const ResolutionData& data, const std::vector<std::string>& ids, const Rational& lambda,
                                MethodChoice choice) {
  if (ids.empty()) throw PreconditionError("no divisor given");
  if (lambda.sign() <= 0) throw PreconditionError("lambda must be positive, got " + lambda.str());
  for (const auto& id : ids) {
    const auto& d = exceptional(data, id);
    if (!is_candidate_for(d, lambda)) {
      throw PreconditionError("lambda = " + lambda.str() + " is not a candidate for " + id + " (lambda * a = " +
                              (lambda * Rational(d.mult)).str() + " is not an integer)");
    }
  }

  if (data.is_surface()) {
    ContributionVerdict v;
    v.divisors = ids;
    v.lambda = lambda;
    v.method = Method::surface_degree;
    auto sv = surface_contributes(data, ids, lambda);
    v.verdict = sv.verdict;
    v.note = sv.detail;
    v.evidence.surface = std::move(sv);
    return v;
  }

  if (ids.size() > 1) {
    ContributionVerdict v;
    v.divisors = ids;
    v.lambda = lambda;
    v.verdict = Verdict::undecidable;
    v.note = "reducible divisors are only decided on surfaces";
    return v;
  }
  const std::string& e = ids.front();
  if (choice == MethodChoice::effectivity) return contributes_by_effectivity(data, e, lambda);

  const auto rep = criteria_report(data, e);
  if (choice == MethodChoice::automatic && rep.necessary.status == Necessary::fails) {
    ContributionVerdict v;
    v.divisors = ids;
    v.lambda = lambda;
    v.verdict = Verdict::does_not_contribute;
    v.method = Method::necessary_condition_failed;
    v.evidence.tested_class = rep.necessary.cls;
    v.evidence.effectivity = rep.necessary.effectivity;
    v.note = rep.necessary.note;
    return v;
  }

  if (rep.criterion && rep.result) {
    const Rational top = Rational(1) - Rational(1, rep.input.a);
    ContributionVerdict v;
    v.divisors = ids;
    v.lambda = lambda;
    v.method = *rep.criterion;
    v.evidence.input = rep.input;
    v.evidence.checks = rep.result->checks;
    if (rep.result->outcome == CriterionOutcome::contracted) {
      v.verdict = Verdict::does_not_contribute;
      v.note = "E is contracted in the log canonical model and contributes no jumping number";
      return v;
    }
    if (rep.result->outcome == CriterionOutcome::contributes && lambda == top) {
      v.verdict = Verdict::contributes;
      v.note = "E contributes 1 - 1/a = " + top.str();
      return v;
    }
    if (choice == MethodChoice::criterion) {
      v.verdict = Verdict::undecidable;
      v.note = rep.result->outcome == CriterionOutcome::open_zone
                   ? "criterion is in its open zone"
                   : "criterion only certifies lambda = 1 - 1/a = " + top.str();
      return v;
    }
  } else if (choice == MethodChoice::criterion) {
    ContributionVerdict v;
    v.divisors = ids;
    v.lambda = lambda;
    v.verdict = Verdict::undecidable;
    v.method = Method::criterion_pn;
    v.note = rep.reason;
    return v;
  }
  return contributes_by_effectivity(data, e, lambda);
}

}  // namespace jumpnum

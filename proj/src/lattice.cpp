#include "jumpnum/lattice.hpp"

#include <algorithm>

#include "jumpnum/cone.hpp"

namespace jumpnum {

MultiplicityMap multiplicities(const ResolutionData& data) {
  MultiplicityMap out;
  for (const auto& d : data.divisors) out[d.id] = d.mult;
  return out;
}

PicClass canonical_class(const ExcDivLattice& lat) {
  PicClass k = PicClass::zero(lat.rank());
  k.coeffs[0] = -lat.n;
  for (std::size_t l = 0; l < lat.centers.size(); ++l) k.coeffs[l + 1] = lat.n - lat.centers[l].dim - 2;
  return k;
}

namespace {

std::int64_t mult_of(const MultiplicityMap& mults, const std::string& id) {
  auto it = mults.find(id);
  if (it == mults.end()) throw DataError("multiplicity of '" + id + "' is not known");
  return it->second;
}

}  // namespace

std::vector<std::string> history_violations(const ExcDivLattice& lat, const BlowupHistory& hist, std::int64_t a,
                                            const MultiplicityMap& mults) {
  std::vector<std::string> out;
  for (const auto& comp : hist.components) {
    if (comp.degree < 0 || comp.m < 0) out.push_back("negative entry for component " + comp.divisor);
    for (const auto& [label, mu] : comp.mu) {
      if (mu < 0) out.push_back("negative mu for component " + comp.divisor + " at " + label);
    }
    for (const auto& [label, ml] : comp.m_after) {
      if (ml < 0 || ml > comp.m) {
        out.push_back("m_j^(" + label + ") = " + std::to_string(ml) + " outside [0, m_j] for component " + comp.divisor);
      }
    }
  }
  for (const auto& [label, m] : hist.center_m) {
    if (!lat.center(label)) out.push_back("history references unknown center '" + label + "'");
    if (m < 0) out.push_back("negative m_l for center " + label);
  }
  if (!out.empty()) return out;

  // sum_j d_j a_j = (1 + sum_j d_j m_j) a
  std::int64_t lhs = 0, dm = 0;
  for (const auto& comp : hist.components) {
    lhs += comp.degree * mult_of(mults, comp.divisor);
    dm += comp.degree * comp.m;
  }
  if (lhs != (1 + dm) * a) {
    out.push_back("sum_j d_j a_j = (1 + sum_j d_j m_j) a fails: " + std::to_string(lhs) +
                  " != " + std::to_string((1 + dm) * a));
  }

  for (const auto& c : lat.centers) {
    std::int64_t rhs = 0, correction = hist.m_of_center(c.label) + c.delta;
    for (const auto& comp : hist.components) {
      rhs += comp.mu_at(c.label) * mult_of(mults, comp.divisor);
      correction -= comp.mu_at(c.label) * comp.m_after_at(c.label);
    }
    for (const auto& p : c.proximities()) {
      const Center* pc = lat.center(p);
      if (pc) rhs += mult_of(mults, pc->divisor);
    }
    rhs += correction * a;
    const std::int64_t al = mult_of(mults, c.divisor);
    if (al != rhs) {
      out.push_back("a_l relation fails at center " + c.label + " (" + c.divisor + "): a_l = " + std::to_string(al) +
                    " but the history gives " + std::to_string(rhs));
    }
  }
  return out;
}

PicClass self_restriction(const ExcDivLattice& lat, const BlowupHistory& hist, std::int64_t a,
                          const MultiplicityMap& mults) {
  const auto violations = history_violations(lat, hist, a, mults);
  if (!violations.empty()) throw DataError("inconsistent blow-up history for " + lat.divisor_id + ": " + violations.front());
  PicClass cls = PicClass::zero(lat.rank());
  std::int64_t dm = 0;
  for (const auto& comp : hist.components) dm += comp.degree * comp.m;
  cls.coeffs[0] = -(1 + dm);
  for (std::size_t l = 0; l < lat.centers.size(); ++l) {
    const auto& c = lat.centers[l];
    std::int64_t v = hist.m_of_center(c.label) + c.delta;
    for (const auto& comp : hist.components) v -= comp.mu_at(c.label) * comp.m_after_at(c.label);
    cls.coeffs[l + 1] = -v;
  }
  return cls;
}

PicClass history_restriction(const ExcDivLattice& lat, const BlowupHistory& hist, const std::string& divisor) {
  PicClass cls = PicClass::zero(lat.rank());
  for (const auto& comp : hist.components) {
    if (comp.divisor != divisor) continue;
    cls.coeffs[0] += comp.degree;
    for (std::size_t l = 0; l < lat.centers.size(); ++l) cls.coeffs[l + 1] -= comp.mu_at(lat.centers[l].label);
  }
  for (std::size_t l = 0; l < lat.centers.size(); ++l) {
    if (lat.centers[l].divisor != divisor) continue;
    cls.coeffs[l + 1] += 1;
    // strict transform of the exceptional curve: subtract every later center proximate to it
    for (std::size_t c = l + 1; c < lat.centers.size(); ++c) {
      for (const auto& p : lat.centers[c].proximities()) {
        if (p == lat.centers[l].label) cls.coeffs[c + 1] -= 1;
      }
    }
  }
  return cls;
}

PicClass self_class(const ResolutionData& data, const std::string& e) {
  const auto& lat = data.lattice(e);
  if (const PicClass* declared = lat.restriction(e)) return *declared;
  if (lat.history) return self_restriction(lat, *lat.history, data.divisor(e).mult, multiplicities(data));
  throw ConfigurationError("lattice of " + e + " declares neither " + e + "|_" + e + " nor a blow-up history");
}

PicClass restriction_or_zero(const ExcDivLattice& lat, const std::string& id) {
  if (const PicClass* c = lat.restriction(id)) return *c;
  return PicClass::zero(lat.rank());
}

namespace {

void require_candidate_for(const PrimeDivisor& e, const Rational& lambda) {
  if (lambda.sign() <= 0) throw PreconditionError("lambda must be positive, got " + lambda.str());
  if (!(lambda * Rational(e.mult)).is_integer()) {
    throw PreconditionError("lambda = " + lambda.str() + " is not a candidate for " + e.id + " (lambda * a = " +
                            (lambda * Rational(e.mult)).str() + " is not an integer)");
  }
}

}  // namespace

PicClass floor_pullback_restriction(const ResolutionData& data, const std::string& e, const Rational& lambda) {
  const auto& owner = data.divisor(e);
  require_candidate_for(owner, lambda);
  const auto& lat = data.lattice(e);
  RationalClass fractional(lat.rank());
  for (const auto& d : data.divisors) {
    if (d.id == e) continue;
    const PicClass* cls = lat.restriction(d.id);
    if (!cls) continue;
    fractional.add_scaled((lambda * Rational(d.mult)).frac(), *cls);
  }
  return -fractional.to_integral("floor(" + lambda.str() + " pi*D)|_" + e);
}

PicClass floor_pullback_restriction_direct(const ResolutionData& data, const std::string& e, const Rational& lambda) {
  const auto& owner = data.divisor(e);
  require_candidate_for(owner, lambda);
  const auto& lat = data.lattice(e);
  PicClass out = (lambda * Rational(owner.mult)).to_int64() * self_class(data, e);
  for (const auto& d : data.divisors) {
    if (d.id == e) continue;
    const PicClass* cls = lat.restriction(d.id);
    if (!cls) continue;
    out += (lambda * Rational(d.mult)).floor().to_int64() * *cls;
  }
  return out;
}

std::string to_string(ConeSource source) {
  switch (source) {
    case ConeSource::declared: return "declared";
    case ConeSource::plain_projective: return "default: plain projective space {h}";
    case ConeSource::collinear_points: return "default: P^2 blown up at collinear points {e_l, h - sum e_l}";
    case ConeSource::two_infinitely_near: return "default: P^2 blown up at two infinitely near points {e_2, e_1 - e_2, h - e_1 - e_2}";
    case ConeSource::none: return "none";
  }
  return "none";
}

EffectiveCone effective_cone(const ExcDivLattice& lat) {
  const std::size_t r = lat.centers.size();
  if (!lat.effective_cone.empty()) return {ConeSource::declared, lat.effective_cone};
  if (r == 0) {
    return {ConeSource::plain_projective, {PicClass({1})}};
  }
  if (lat.n != 3) return {};
  for (const auto& c : lat.centers) {
    if (c.dim != 0) return {};
  }
  const bool all_distinct = std::all_of(lat.centers.begin(), lat.centers.end(),
                                        [](const Center& c) { return c.proximities().empty(); });
  if (all_distinct && lat.flags.centers_in_hyperplane) {
    EffectiveCone cone{ConeSource::collinear_points, {}};
    PicClass line = PicClass::zero(r + 1);
    line.coeffs[0] = 1;
    for (std::size_t l = 0; l < r; ++l) {
      PicClass e = PicClass::zero(r + 1);
      e.coeffs[l + 1] = 1;
      cone.generators.push_back(e);
      line.coeffs[l + 1] = -1;
    }
    cone.generators.push_back(line);
    return cone;
  }
  if (r == 2 && lat.centers[0].proximities().empty() && lat.centers[1].infinitely_near_parent &&
      *lat.centers[1].infinitely_near_parent == lat.centers[0].label && lat.centers[1].proximate_to.empty()) {
    return {ConeSource::two_infinitely_near, {PicClass({0, 0, 1}), PicClass({0, 1, -1}), PicClass({1, -1, -1})}};
  }
  return {};
}

std::string to_string(Effectivity e) {
  switch (e) {
    case Effectivity::yes: return "yes";
    case Effectivity::no: return "no";
    case Effectivity::unknown: return "unknown";
  }
  return "unknown";
}

EffectivityResult is_effective(const ExcDivLattice& lat, const PicClass& cls) {
  if (cls.rank() != lat.rank()) throw DataError("class rank does not match lattice of " + lat.divisor_id);
  EffectivityResult res;
  res.cone = effective_cone(lat);
  if (res.cone.generators.empty()) {
    res.status = cls.is_zero() ? Effectivity::yes : Effectivity::unknown;
    return res;
  }
  if (res.cone.source == ConeSource::plain_projective) {
    res.status = cls.coeffs[0] >= 0 ? Effectivity::yes : Effectivity::no;
    if (res.status == Effectivity::yes) res.weights = {Rational(cls.coeffs[0])};
    return res;
  }
  std::vector<RationalVector> gens;
  for (const auto& g : res.cone.generators) {
    RationalVector v;
    for (auto c : g.coeffs) v.emplace_back(c);
    gens.push_back(std::move(v));
  }
  RationalVector target;
  for (auto c : cls.coeffs) target.emplace_back(c);
  if (auto w = nonnegative_combination(gens, target)) {
    res.status = Effectivity::yes;
    res.weights = std::move(*w);
  } else {
    res.status = Effectivity::no;
  }
  return res;
}

Rational pair(const PicClass& cls, const CurveFamily& family) {
  if (cls.rank() != family.pairings.size()) {
    throw DataError("curve family " + family.name + " has " + std::to_string(family.pairings.size()) +
                    " pairings but the class has rank " + std::to_string(cls.rank()));
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < cls.rank(); ++i) sum += cls.coeffs[i] * family.pairings[i];
  return Rational(sum);
}

}  // namespace jumpnum

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jumpnum/model.hpp"
#include "jumpnum/rational.hpp"

namespace jumpnum {

using MultiplicityMap = std::map<std::string, std::int64_t>;

/// id -> multiplicity a_i for every declared divisor.
MultiplicityMap multiplicities(const ResolutionData& data);

/// K_E = -n h + sum_l (n - k_l - 2) e_l.
PicClass canonical_class(const ExcDivLattice& lat);

/// Violations of the blow-up-history relations for divisor E of multiplicity `a`:
///   sum_j d_j a_j = (1 + sum_j d_j m_j) a
///   a_l = sum_j mu_jl a_j + sum_{p proximate to l} a_p + (m_l - sum_j mu_jl m_j^(l) + delta_l) a
/// plus basic range checks on the history entries. Empty means consistent.
std::vector<std::string> history_violations(const ExcDivLattice& lat, const BlowupHistory& hist, std::int64_t a,
                                            const MultiplicityMap& mults);

/// E|_E = -(1 + sum_j d_j m_j) h - sum_l (m_l - sum_j mu_jl m_j^(l) + delta_l) e_l.
/// Throws DataError (citing the violated relation) when the history is inconsistent.
PicClass self_restriction(const ExcDivLattice& lat, const BlowupHistory& hist, std::int64_t a,
                          const MultiplicityMap& mults);

/// Class of `divisor`|_E as implied by the history: sum of its non-center components
/// d_j h - sum mu_jl e_l, plus e_l - sum_{c proximate to l} e_c for each center it cuts.
PicClass history_restriction(const ExcDivLattice& lat, const BlowupHistory& hist, const std::string& divisor);

/// E|_E: the declared self-restriction if present, otherwise derived from the history.
/// Throws ConfigurationError if neither is available.
PicClass self_class(const ResolutionData& data, const std::string& e);

/// Class of E_i|_E, zero when not declared.
PicClass restriction_or_zero(const ExcDivLattice& lat, const std::string& id);

/// floor(lambda pi^*D)|_E computed as -sum_{i != E} {lambda a_i} E_i|_E (uses pi^*D|_E = 0).
/// Requires lambda * a_E integral (PreconditionError). Throws DataError on a non-integral result.
PicClass floor_pullback_restriction(const ResolutionData& data, const std::string& e, const Rational& lambda);

/// Independent route: sum_{i != E} floor(lambda a_i) E_i|_E + lambda a_E * E|_E.
PicClass floor_pullback_restriction_direct(const ResolutionData& data, const std::string& e, const Rational& lambda);

enum class ConeSource { declared, plain_projective, collinear_points, two_infinitely_near, none };
std::string to_string(ConeSource source);

struct EffectiveCone {
  ConeSource source = ConeSource::none;
  std::vector<PicClass> generators;
};

/// Declared generators, or one of the shipped defaults when the configuration is recognised.
EffectiveCone effective_cone(const ExcDivLattice& lat);

enum class Effectivity { yes, no, unknown };
std::string to_string(Effectivity e);

struct EffectivityResult {
  Effectivity status = Effectivity::unknown;
  EffectiveCone cone;
  std::vector<Rational> weights;  // certificate: cls = sum weights[g] * generators[g]
};

EffectivityResult is_effective(const ExcDivLattice& lat, const PicClass& cls);

/// Dot product of class coefficients with the family's pairing vector.
Rational pair(const PicClass& cls, const CurveFamily& family);

}  // namespace jumpnum

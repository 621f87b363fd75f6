#pragma once

#include <optional>
#include <vector>

#include "jumpnum/rational.hpp"

namespace jumpnum {

using RationalVector = std::vector<Rational>;

/// Exact rational cone membership.
///
/// Looks for weights x >= 0 with sum_g x[g] * generators[g] == target. Equalities are
/// eliminated by Gaussian substitution, the remaining inequality system by Fourier-Motzkin,
/// and a witness is recovered by back-substitution. Returns nullopt when infeasible.
/// The returned weights are always re-checked against the target before being returned.
std::optional<RationalVector> nonnegative_combination(const std::vector<RationalVector>& generators,
                                                      const RationalVector& target);

/// sum_g weights[g] * generators[g]
RationalVector combine(const std::vector<RationalVector>& generators, const RationalVector& weights);

}  // namespace jumpnum

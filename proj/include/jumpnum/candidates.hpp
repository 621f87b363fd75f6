#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jumpnum/model.hpp"
#include "jumpnum/rational.hpp"

namespace jumpnum {

struct CandidateEntry {
  Rational lambda;
  std::set<std::string> supporters;  // divisors i with lambda = (k_i + n)/a_i, n >= 1
  friend bool operator==(const CandidateEntry&, const CandidateEntry&) = default;
};

struct CandidateList {
  std::vector<CandidateEntry> entries;  // strictly increasing in lambda
  Rational upper;

  std::vector<Rational> values() const;
};

/// All (k_i + n)/a_i in (0, upper], merged and sorted. Throws PreconditionError if upper <= 0.
CandidateList candidates(const ResolutionData& data, const Rational& upper);

/// Values (k_e + n)/a_e in (0, upper] of one divisor.
std::vector<Rational> candidates_of(const PrimeDivisor& e, const Rational& upper);

/// lambda * a_e is an integer.
bool is_candidate_for(const PrimeDivisor& e, const Rational& lambda);

/// Divisors for which lambda is a candidate in the broad sense (lambda * a integral).
std::set<std::string> candidate_for(const ResolutionData& data, const Rational& lambda);

/// min_i (k_i + 1)/a_i and the divisors achieving it.
std::pair<Rational, std::set<std::string>> lct(const ResolutionData& data);

/// {l + m : l in input, m >= 0 integer, l + m <= upper}. Inputs must lie in (0, 1].
std::set<Rational> skoda_extend(const std::set<Rational>& jns, const Rational& upper);

}  // namespace jumpnum

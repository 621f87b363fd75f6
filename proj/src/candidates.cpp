#include "jumpnum/candidates.hpp"

#include <map>

namespace jumpnum {

std::vector<Rational> CandidateList::values() const {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.lambda);
  return out;
}

std::vector<Rational> candidates_of(const PrimeDivisor& e, const Rational& upper) {
  if (upper.sign() <= 0) throw PreconditionError("upper bound must be positive, got " + upper.str());
  std::vector<Rational> out;
  for (std::int64_t n = 1;; ++n) {
    Rational v(e.discrepancy + n, e.mult);
    if (v > upper) break;
    out.push_back(std::move(v));
  }
  return out;
}

CandidateList candidates(const ResolutionData& data, const Rational& upper) {
  if (upper.sign() <= 0) throw PreconditionError("upper bound must be positive, got " + upper.str());
  std::map<Rational, std::set<std::string>> merged;
  for (const auto& d : data.divisors) {
    for (auto& v : candidates_of(d, upper)) merged[v].insert(d.id);
  }
  CandidateList out;
  out.upper = upper;
  for (auto& [lambda, ids] : merged) out.entries.push_back({lambda, std::move(ids)});
  return out;
}

bool is_candidate_for(const PrimeDivisor& e, const Rational& lambda) {
  return (lambda * Rational(e.mult)).is_integer();
}

std::set<std::string> candidate_for(const ResolutionData& data, const Rational& lambda) {
  std::set<std::string> out;
  for (const auto& d : data.divisors) {
    if (is_candidate_for(d, lambda)) out.insert(d.id);
  }
  return out;
}

std::pair<Rational, std::set<std::string>> lct(const ResolutionData& data) {
  if (data.divisors.empty()) throw PreconditionError("no divisors declared");
  Rational best(data.divisors.front().discrepancy + 1, data.divisors.front().mult);
  std::set<std::string> ids;
  for (const auto& d : data.divisors) {
    Rational v(d.discrepancy + 1, d.mult);
    if (v < best) {
      best = v;
      ids.clear();
    }
    if (v == best) ids.insert(d.id);
  }
  return {best, ids};
}

std::set<Rational> skoda_extend(const std::set<Rational>& jns, const Rational& upper) {
  std::set<Rational> out;
  for (const auto& l : jns) {
    if (l.sign() <= 0 || l > Rational(1)) throw PreconditionError("skoda_extend input " + l.str() + " is outside (0, 1]");
    for (Rational v = l; v <= upper; v += Rational(1)) out.insert(v);
  }
  return out;
}

}  // namespace jumpnum

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jumpnum/model.hpp"
#include "jumpnum/rational.hpp"

namespace jumpnum {

struct SurfaceProfile {
  std::string id;
  std::int64_t a = 0;
  std::int64_t k = 0;
  std::int64_t self_int = 0;
  std::int64_t d = 0;  // E.E°: sum of intersection numbers over all edges at E
  friend bool operator==(const SurfaceProfile&, const SurfaceProfile&) = default;
};

/// Profiles of the exceptional curves in declared order.
std::vector<SurfaceProfile> surface_profiles(const ResolutionData& data);

/// Integer divisor on the resolution surface, keyed by divisor id. Missing ids mean 0.
using SurfaceDivisor = std::map<std::string, std::int64_t>;

/// D.E for an exceptional E, using the derived self-intersections.
std::int64_t pairing(const ResolutionData& data, const std::map<std::string, std::int64_t>& self_int,
                     const SurfaceDivisor& div, const std::string& e);

struct AntinefClosure {
  SurfaceDivisor divisor;
  std::size_t steps = 0;
};

inline constexpr std::size_t kUnloadingCap = 1'000'000;

/// Smallest D' >= div on exceptional curves, equal to div on strict transforms, with D'.E <= 0 for
/// every exceptional E. Throws DomainError if the loop exceeds `cap` steps or the matrix is not
/// negative definite.
AntinefClosure unloading_closure(const ResolutionData& data, const SurfaceDivisor& div,
                                 std::size_t cap = kUnloadingCap);

/// floor(lambda pi*C) - K_pi on every component.
SurfaceDivisor ideal_divisor(const ResolutionData& data, const Rational& lambda);

/// Candidate walk over (0, upper] with the antinef closure at every candidate, in order.
std::vector<std::pair<Rational, SurfaceDivisor>> closure_walk(const ResolutionData& data, const Rational& upper);

std::vector<Rational> surface_jumping_numbers(const ResolutionData& data, const Rational& upper);

enum class Verdict { contributes, does_not_contribute, undecidable };
std::string to_string(Verdict v);

struct SurfaceVerdict {
  Verdict verdict = Verdict::undecidable;
  std::vector<std::int64_t> degrees;  // per component: degree of K_E - floor(lambda pi*C)|_E on that component
  std::vector<std::string> witness;   // sub-chain carrying a nonzero section
  std::string detail;
};

/// Contribution of the (possibly reducible) exceptional divisor with components `ids` at lambda.
/// Reducible inputs must form a connected chain; anything else is reported undecidable.
SurfaceVerdict surface_contributes(const ResolutionData& data, const std::vector<std::string>& ids,
                                   const Rational& lambda);

/// Chain of P^1's with line-bundle degrees `degrees` along the chain: the [lo, hi] range of a
/// sub-chain carrying a nonzero global section, or nullopt when there are no sections.
std::optional<std::pair<std::size_t, std::size_t>> chain_section_support(const std::vector<std::int64_t>& degrees);

struct DegreeRecord {
  std::string id;
  std::int64_t d = 0;
  std::int64_t a = 0;
  bool contributes = false;  // d >= 3, equivalently survives in the log canonical model
  Rational number;           // 1 - 1/a
};

/// Requires the minimal-resolution flag (PreconditionError otherwise).
std::vector<DegreeRecord> degree_report(const ResolutionData& data);

/// Standard minimal embedded resolution of x^p = y^q (coprime p, q >= 2), with the minimality flag set.
ResolutionData monomial_curve_resolution(std::int64_t p, std::int64_t q);

}  // namespace jumpnum

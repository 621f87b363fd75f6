#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jumpnum/model.hpp"
#include "jumpnum/rational.hpp"

namespace jumpnum {

struct Diagnostic {
  std::string subject;   // divisor id, edge, or lattice the problem is about
  std::string relation;  // short name of the violated relation
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string to_string(const Diagnostic& d);

/// Checks every type invariant and cross-module consistency relation. Never mutates;
/// an empty result means the data is consistent.
std::vector<Diagnostic> validate(const ResolutionData& data);

/// E^2 = -(sum_{F != E} a_F (F.E)) / a_E for every exceptional E of a surface resolution.
/// Throws DomainError for non-surfaces, DataError when the division is not exact.
std::map<std::string, std::int64_t> self_intersections(const ResolutionData& data);

/// Intersection number F.E read off the dual graph (0 when no edge).
std::int64_t edge_intersection(const ResolutionData& data, const std::string& a, const std::string& b);

/// Exceptional ids in declared order.
std::vector<std::string> exceptional_ids(const ResolutionData& data);

/// Symmetric intersection matrix of the exceptional curves (declared order), using derived
/// self-intersections on the diagonal.
std::vector<std::vector<Rational>> exceptional_intersection_matrix(const ResolutionData& data);

/// Negative definiteness via leading principal minors (exact Gaussian elimination).
bool is_negative_definite(const std::vector<std::vector<Rational>>& m);

}  // namespace jumpnum

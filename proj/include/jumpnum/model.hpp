#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jumpnum/rational.hpp"

namespace jumpnum {

// Error categories. The CLI maps each to a distinct exit code.

/// Fixture text could not be parsed or violates the schema.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Declared data contradicts one of the consistency relations.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation precondition (non-candidate lambda, unknown id, ...).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Required optional data (lattice, curve family, cone) is missing.
class ConfigurationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operation is not defined for this kind of input (e.g. surface-only op on a 3-fold).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class DivisorKind { exceptional, strict_transform };

std::string to_string(DivisorKind kind);
DivisorKind divisor_kind_from_string(const std::string& text);

struct PrimeDivisor {
  std::string id;
  std::string name;
  std::int64_t mult = 1;         // coefficient in the total transform
  std::int64_t discrepancy = 0;  // coefficient in the relative canonical divisor
  DivisorKind kind = DivisorKind::exceptional;

  bool is_exceptional() const { return kind == DivisorKind::exceptional; }
  friend bool operator==(const PrimeDivisor&, const PrimeDivisor&) = default;
};

struct DualGraphEdge {
  std::string a;
  std::string b;
  std::int64_t intersection = 1;
  friend bool operator==(const DualGraphEdge&, const DualGraphEdge&) = default;
};

/// Integer class c0*h + sum_l c_l*e_l in the Picard lattice of a blown-up projective space.
/// e_l is the total transform of the l-th exceptional divisor.
struct PicClass {
  std::vector<std::int64_t> coeffs;

  PicClass() = default;
  explicit PicClass(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
  static PicClass zero(std::size_t rank) { return PicClass(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const { return coeffs.size(); }
  bool is_zero() const;

  PicClass& operator+=(const PicClass& rhs);
  PicClass& operator-=(const PicClass& rhs);
  friend PicClass operator+(PicClass a, const PicClass& b) { return a += b; }
  friend PicClass operator-(PicClass a, const PicClass& b) { return a -= b; }
  PicClass operator-() const;
  friend PicClass operator*(std::int64_t k, PicClass c);

  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// Human-readable form, e.g. "h - e_1 - 2e_2", "-e_2", "0".
std::string to_string(const PicClass& cls);

/// Rational-coefficient class, used only for intermediate results.
struct RationalClass {
  std::vector<Rational> coeffs;

  explicit RationalClass(std::size_t rank) : coeffs(rank, Rational(0)) {}
  void add_scaled(const Rational& k, const PicClass& cls);
  bool is_integral() const;
  /// Throws DataError naming `context` if any coordinate is non-integral.
  PicClass to_integral(const std::string& context) const;
};

struct Center {
  std::string label;
  std::string divisor;  // divisor whose intersection with E produced e_l
  std::int64_t dim = 0;
  std::int64_t delta = 0;  // 1 iff the ambient center lies inside E
  std::optional<std::string> infinitely_near_parent;
  std::vector<std::string> proximate_to;  // satellite proximities besides the parent

  /// Parent (if any) followed by proximate_to.
  std::vector<std::string> proximities() const;
  friend bool operator==(const Center&, const Center&) = default;
};

struct CurveFamily {
  std::string name;
  std::vector<std::int64_t> pairings;  // (h.C, e_1.C, ..., e_r.C)
  friend bool operator==(const CurveFamily&, const CurveFamily&) = default;
};

/// One non-center component E_j' of E meeting another divisor.
struct HistoryComponent {
  std::string divisor;
  std::int64_t degree = 0;                   // d_j
  std::map<std::string, std::int64_t> mu;    // center label -> mu_jl
  std::int64_t m = 0;                        // times used as a center after E was created
  std::map<std::string, std::int64_t> m_after;  // center label -> m_j^(l)

  std::int64_t mu_at(const std::string& label) const;
  std::int64_t m_after_at(const std::string& label) const;
  friend bool operator==(const HistoryComponent&, const HistoryComponent&) = default;
};

struct BlowupHistory {
  std::vector<HistoryComponent> components;
  std::map<std::string, std::int64_t> center_m;  // center label -> m_l

  std::int64_t m_of_center(const std::string& label) const;
  friend bool operator==(const BlowupHistory&, const BlowupHistory&) = default;
};

struct LatticeFlags {
  bool created_by_point_blowup = false;
  bool centers_in_hyperplane = false;
  bool minimal_resolution = false;
  bool effectivity_as_Q_divisor = false;
  friend bool operator==(const LatticeFlags&, const LatticeFlags&) = default;
};

/// Picard-lattice data of one exceptional divisor E isomorphic to P^{n-1} blown up at centers.
struct ExcDivLattice {
  std::string divisor_id;
  std::int64_t n = 3;
  std::vector<Center> centers;
  std::vector<std::pair<std::string, PicClass>> restrictions;  // divisor id -> class of E_i|_E
  std::vector<PicClass> effective_cone;
  std::vector<CurveFamily> curve_families;
  std::optional<BlowupHistory> history;
  LatticeFlags flags;

  std::size_t rank() const { return 1 + centers.size(); }
  const PicClass* restriction(const std::string& id) const;
  const Center* center(const std::string& label) const;
  std::optional<std::size_t> center_index(const std::string& label) const;
  const CurveFamily* family(const std::string& name) const;
  friend bool operator==(const ExcDivLattice&, const ExcDivLattice&) = default;
};

struct ResolutionFlags {
  bool minimal_resolution = false;
  friend bool operator==(const ResolutionFlags&, const ResolutionFlags&) = default;
};

/// Combinatorial record of a log resolution. Divisor order is the fixture order.
struct ResolutionData {
  std::int64_t ambient_dim = 2;
  std::vector<PrimeDivisor> divisors;
  std::optional<std::vector<DualGraphEdge>> dual_graph;
  std::map<std::string, ExcDivLattice> lattices;
  ResolutionFlags flags;
  std::string provenance;

  const PrimeDivisor* find(const std::string& id) const;
  /// Throws PreconditionError for unknown ids.
  const PrimeDivisor& divisor(const std::string& id) const;
  /// Throws ConfigurationError when no lattice is declared for `id`.
  const ExcDivLattice& lattice(const std::string& id) const;
  bool is_surface() const { return ambient_dim == 2; }

  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

}  // namespace jumpnum

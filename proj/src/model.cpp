#include "jumpnum/model.hpp"

#include <algorithm>
#include <sstream>

namespace jumpnum {

std::string to_string(DivisorKind kind) {
  return kind == DivisorKind::exceptional ? "exceptional" : "strict-transform";
}

DivisorKind divisor_kind_from_string(const std::string& text) {
  if (text == "exceptional") return DivisorKind::exceptional;
  if (text == "strict-transform") return DivisorKind::strict_transform;
  throw ParseError("unknown divisor kind '" + text + "' (expected exceptional or strict-transform)");
}

bool PicClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

PicClass& PicClass::operator+=(const PicClass& rhs) {
  if (rhs.rank() != rank()) throw DataError("Picard class rank mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
  return *this;
}

PicClass& PicClass::operator-=(const PicClass& rhs) {
  if (rhs.rank() != rank()) throw DataError("Picard class rank mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
  return *this;
}

PicClass PicClass::operator-() const {
  PicClass out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

PicClass operator*(std::int64_t k, PicClass c) {
  for (auto& x : c.coeffs) x *= k;
  return c;
}

std::string to_string(const PicClass& cls) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < cls.coeffs.size(); ++i) {
    const std::int64_t c = cls.coeffs[i];
    if (c == 0) continue;
    const std::string symbol = i == 0 ? "h" : "e_" + std::to_string(i);
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << symbol;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

void RationalClass::add_scaled(const Rational& k, const PicClass& cls) {
  if (cls.rank() != coeffs.size()) throw DataError("Picard class rank mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += k * Rational(cls.coeffs[i]);
}

bool RationalClass::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r.is_integer(); });
}

PicClass RationalClass::to_integral(const std::string& context) const {
  PicClass out = PicClass::zero(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_integer()) {
      throw DataError(context + ": coordinate " + std::to_string(i) + " is " + coeffs[i].str() +
                      ", not an integer (declared restriction classes are inconsistent)");
    }
    out.coeffs[i] = coeffs[i].to_int64();
  }
  return out;
}

std::vector<std::string> Center::proximities() const {
  std::vector<std::string> out;
  if (infinitely_near_parent) out.push_back(*infinitely_near_parent);
  out.insert(out.end(), proximate_to.begin(), proximate_to.end());
  return out;
}

std::int64_t HistoryComponent::mu_at(const std::string& label) const {
  auto it = mu.find(label);
  return it == mu.end() ? 0 : it->second;
}

std::int64_t HistoryComponent::m_after_at(const std::string& label) const {
  auto it = m_after.find(label);
  return it == m_after.end() ? 0 : it->second;
}

std::int64_t BlowupHistory::m_of_center(const std::string& label) const {
  auto it = center_m.find(label);
  return it == center_m.end() ? 0 : it->second;
}

const PicClass* ExcDivLattice::restriction(const std::string& id) const {
  for (const auto& [key, cls] : restrictions) {
    if (key == id) return &cls;
  }
  return nullptr;
}

const Center* ExcDivLattice::center(const std::string& label) const {
  for (const auto& c : centers) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

std::optional<std::size_t> ExcDivLattice::center_index(const std::string& label) const {
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (centers[i].label == label) return i;
  }
  return std::nullopt;
}

const CurveFamily* ExcDivLattice::family(const std::string& name) const {
  for (const auto& f : curve_families) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const PrimeDivisor* ResolutionData::find(const std::string& id) const {
  for (const auto& d : divisors) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

const PrimeDivisor& ResolutionData::divisor(const std::string& id) const {
  if (const auto* d = find(id)) return *d;
  throw PreconditionError("unknown divisor id '" + id + "'");
}

const ExcDivLattice& ResolutionData::lattice(const std::string& id) const {
  divisor(id);
  auto it = lattices.find(id);
  if (it == lattices.end()) {
    throw ConfigurationError("no lattice data declared for divisor '" + id + "'");
  }
  return it->second;
}

}  // namespace jumpnum

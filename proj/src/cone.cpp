#include "jumpnum/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace jumpnum {

namespace {

// sum_i coeffs[i] * y_i + constant >= 0
struct Inequality {
  RationalVector coeffs;
  Rational constant;
};

// Scale so the first nonzero entry has absolute value one; used for de-duplication.
Inequality normalized(Inequality q) {
  Rational lead(0);
  for (const auto& c : q.coeffs) {
    if (!c.is_zero()) {
      lead = c.abs();
      break;
    }
  }
  if (lead.is_zero()) lead = q.constant.abs();
  if (lead.is_zero()) return q;
  for (auto& c : q.coeffs) c /= lead;
  q.constant /= lead;
  return q;
}

std::string key_of(const Inequality& q) {
  std::string key;
  for (const auto& c : q.coeffs) key += c.str() + ",";
  return key + "|" + q.constant.str();
}

bool is_constant(const Inequality& q) {
  for (const auto& c : q.coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

// Fourier-Motzkin over the free variables. Returns a witness y or nullopt.
std::optional<RationalVector> solve_inequalities(std::vector<Inequality> system, std::size_t nvars) {
  std::vector<std::vector<Inequality>> stages;
  stages.reserve(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    stages.push_back(system);
    std::vector<Inequality> pos, neg, next;
    for (auto& q : system) {
      const int s = q.coeffs[v].sign();
      if (s > 0) pos.push_back(q);
      else if (s < 0) neg.push_back(q);
      else next.push_back(q);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Rational wp = -n.coeffs[v];
        const Rational wn = p.coeffs[v];
        Inequality c{RationalVector(nvars, Rational(0)), wp * p.constant + wn * n.constant};
        for (std::size_t i = 0; i < nvars; ++i) c.coeffs[i] = wp * p.coeffs[i] + wn * n.coeffs[i];
        c.coeffs[v] = Rational(0);
        next.push_back(std::move(c));
      }
    }
    system.clear();
    std::set<std::string> seen;
    for (auto& q : next) {
      q = normalized(std::move(q));
      if (is_constant(q)) {
        if (q.constant.sign() < 0) return std::nullopt;
        continue;
      }
      if (seen.insert(key_of(q)).second) system.push_back(std::move(q));
    }
  }
  for (const auto& q : system) {
    if (q.constant.sign() < 0) return std::nullopt;
  }

  RationalVector y(nvars, Rational(0));
  for (std::size_t v = nvars; v-- > 0;) {
    std::optional<Rational> lower, upper;
    for (const auto& q : stages[v]) {
      const Rational& c = q.coeffs[v];
      if (c.is_zero()) continue;
      Rational rest = q.constant;
      for (std::size_t i = v + 1; i < nvars; ++i) rest += q.coeffs[i] * y[i];
      const Rational bound = -rest / c;
      if (c.sign() > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    Rational value = lower ? *lower : (upper ? std::min(*upper, Rational(0)) : Rational(0));
    if (upper && value > *upper) return std::nullopt;  // cannot happen for a feasible projection
    y[v] = value;
  }
  return y;
}

}  // namespace

RationalVector combine(const std::vector<RationalVector>& generators, const RationalVector& weights) {
  if (generators.size() != weights.size()) throw std::invalid_argument("weight count mismatch");
  if (generators.empty()) return {};
  RationalVector out(generators.front().size(), Rational(0));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != out.size()) throw std::invalid_argument("generator dimension mismatch");
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += weights[g] * generators[g][c];
  }
  return out;
}

std::optional<RationalVector> nonnegative_combination(const std::vector<RationalVector>& generators,
                                                      const RationalVector& target) {
  const std::size_t m = generators.size();
  const std::size_t dim = target.size();
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("generator dimension mismatch");
  }

  // Equality rows: sum_g G[g][c] x_g - t[c] = 0, stored as [coeffs | constant].
  std::vector<RationalVector> rows(dim, RationalVector(m + 1, Rational(0)));
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t g = 0; g < m; ++g) rows[c][g] = generators[g][c];
    rows[c][m] = -target[c];
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < dim; ++col) {
    std::size_t sel = r;
    while (sel < dim && rows[sel][col].is_zero()) ++sel;
    if (sel == dim) continue;
    std::swap(rows[r], rows[sel]);
    const Rational p = rows[r][col];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j <= m; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < dim; ++i) {
    if (!rows[i][m].is_zero()) return std::nullopt;  // 0 = nonzero
  }

  std::vector<bool> is_pivot(m, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t g = 0; g < m; ++g) {
    if (!is_pivot[g]) free_vars.push_back(g);
  }
  const std::size_t nf = free_vars.size();

  // x_g as an affine function of the free variables.
  std::vector<Inequality> exprs(m, Inequality{RationalVector(nf, Rational(0)), Rational(0)});
  for (std::size_t i = 0; i < nf; ++i) exprs[free_vars[i]].coeffs[i] = Rational(1);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    auto& e = exprs[pivot_col[i]];
    e.constant = -rows[i][m];
    for (std::size_t f = 0; f < nf; ++f) e.coeffs[f] = -rows[i][free_vars[f]];
  }

  std::optional<RationalVector> y;
  if (nf == 0) {
    for (const auto& e : exprs) {
      if (e.constant.sign() < 0) return std::nullopt;
    }
    y = RationalVector{};
  } else {
    y = solve_inequalities(exprs, nf);
    if (!y) return std::nullopt;
  }

  RationalVector x(m, Rational(0));
  for (std::size_t g = 0; g < m; ++g) {
    Rational v = exprs[g].constant;
    for (std::size_t f = 0; f < nf; ++f) v += exprs[g].coeffs[f] * (*y)[f];
    if (v.sign() < 0) throw std::logic_error("cone solver produced a negative weight");
    x[g] = v;
  }
  if (m > 0 && combine(generators, x) != target) throw std::logic_error("cone solver certificate does not reproduce target");
  if (m == 0) {
    for (const auto& t : target) {
      if (!t.is_zero()) return std::nullopt;
    }
  }
  return x;
}

}  // namespace jumpnum

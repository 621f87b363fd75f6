#include "jumpnum/validate.hpp"

#include <algorithm>
#include <set>

#include "jumpnum/lattice.hpp"

namespace jumpnum {

std::string to_string(const Diagnostic& d) { return d.subject + ": " + d.relation + ": " + d.message; }

std::int64_t edge_intersection(const ResolutionData& data, const std::string& a, const std::string& b) {
  if (!data.dual_graph) return 0;
  for (const auto& e : *data.dual_graph) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.intersection;
  }
  return 0;
}

std::vector<std::string> exceptional_ids(const ResolutionData& data) {
  std::vector<std::string> out;
  for (const auto& d : data.divisors) {
    if (d.is_exceptional()) out.push_back(d.id);
  }
  return out;
}

namespace {

// sum_{F != E} a_F (F.E)
std::int64_t neighbour_weight(const ResolutionData& data, const std::string& e) {
  std::int64_t sum = 0;
  for (const auto& f : data.divisors) {
    if (f.id == e) continue;
    sum += f.mult * edge_intersection(data, f.id, e);
  }
  return sum;
}

class Collector {
public:
  void add(std::string subject, std::string relation, std::string message) {
    out_.push_back({std::move(subject), std::move(relation), std::move(message)});
  }
  std::vector<Diagnostic> take() { return std::move(out_); }
  bool empty() const { return out_.empty(); }

private:
  std::vector<Diagnostic> out_;
};

void check_divisors(const ResolutionData& data, Collector& diag) {
  std::set<std::string> seen;
  for (const auto& d : data.divisors) {
    if (d.id.empty()) diag.add("<divisor>", "id", "divisor with empty id");
    if (!seen.insert(d.id).second) diag.add(d.id, "id", "duplicate divisor id");
    if (d.mult < 1) diag.add(d.id, "mult >= 1", "multiplicity " + std::to_string(d.mult) + " is not positive");
    if (d.discrepancy < 0) {
      diag.add(d.id, "discrepancy >= 0", "discrepancy " + std::to_string(d.discrepancy) + " is negative");
    }
    if (d.is_exceptional() && d.discrepancy == 0) {
      diag.add(d.id, "exceptional discrepancy >= 1", "exceptional divisor over a smooth ambient has discrepancy 0");
    }
    if (!d.is_exceptional() && d.discrepancy != 0) {
      diag.add(d.id, "strict transform discrepancy = 0",
               "strict transform has discrepancy " + std::to_string(d.discrepancy));
    }
  }
}

void check_dual_graph(const ResolutionData& data, Collector& diag) {
  if (!data.is_surface()) {
    if (data.dual_graph && !data.dual_graph->empty()) {
      diag.add("dual_graph", "surface only", "dual graph declared for ambient dimension " +
                                                 std::to_string(data.ambient_dim));
    }
    return;
  }
  if (!data.dual_graph) {
    diag.add("dual_graph", "required", "surface resolution without a dual graph");
    return;
  }
  std::set<std::pair<std::string, std::string>> pairs;
  bool edges_ok = true;
  for (const auto& e : *data.dual_graph) {
    const std::string name = e.a + "-" + e.b;
    if (!data.find(e.a) || !data.find(e.b)) {
      diag.add(name, "edge endpoints", "edge references an undeclared divisor");
      edges_ok = false;
    }
    if (e.a == e.b) {
      diag.add(name, "a != b", "self-loop in dual graph");
      edges_ok = false;
    }
    if (e.intersection < 1) {
      diag.add(name, "intersection >= 1", "non-positive intersection number " + std::to_string(e.intersection));
      edges_ok = false;
    }
    auto key = std::minmax(e.a, e.b);
    if (!pairs.insert({key.first, key.second}).second) {
      diag.add(name, "single edge per pair", "duplicate edge");
      edges_ok = false;
    }
  }
  if (!edges_ok) return;

  bool self_ok = true;
  for (const auto& d : data.divisors) {
    if (!d.is_exceptional() || d.mult < 1) continue;
    const std::int64_t w = neighbour_weight(data, d.id);
    if (w % d.mult != 0) {
      diag.add(d.id, "pi*C." + d.id + " != 0",
               "sum of a_F (F." + d.id + ") = " + std::to_string(w) + " is not divisible by a = " +
                   std::to_string(d.mult));
      self_ok = false;
    } else if (w / d.mult < 1) {
      diag.add(d.id, "pi*C." + d.id + " != 0",
               "derived self-intersection " + std::to_string(-w / d.mult) + " is not negative");
      self_ok = false;
    }
  }
  if (self_ok) {
    // exceptional curves are smooth rational: K.E + E.E = -2 with K = sum k_F F
    for (const auto& d : data.divisors) {
      if (!d.is_exceptional()) continue;
      const std::int64_t self = -neighbour_weight(data, d.id) / d.mult;
      std::int64_t ke = d.discrepancy * self;
      for (const auto& e : *data.dual_graph) {
        if (e.a == d.id) ke += data.find(e.b)->discrepancy * e.intersection;
        if (e.b == d.id) ke += data.find(e.a)->discrepancy * e.intersection;
      }
      if (ke + self != -2) {
        diag.add(d.id, "K." + d.id + " + " + d.id + "^2 = -2",
                 "adjunction gives " + std::to_string(ke + self) + " (E^2 = " + std::to_string(self) + ")");
      }
    }
  }
  if (self_ok && !exceptional_ids(data).empty() &&
      !is_negative_definite(exceptional_intersection_matrix(data))) {
    diag.add("dual_graph", "negative definite", "exceptional intersection matrix is not negative definite");
  }
}

void check_lattice(const ResolutionData& data, const std::string& key, const ExcDivLattice& lat, Collector& diag) {
  const std::string subj = "lattice " + key;
  const PrimeDivisor* owner = data.find(key);
  if (!owner) {
    diag.add(subj, "lattice owner", "lattice declared for undeclared divisor");
    return;
  }
  if (!owner->is_exceptional()) diag.add(subj, "lattice owner", "lattice declared for a strict transform");
  if (lat.n != data.ambient_dim) {
    diag.add(subj, "n = ambient_dim",
             "lattice dimension " + std::to_string(lat.n) + " differs from ambient " + std::to_string(data.ambient_dim));
  }
  const std::size_t rank = lat.rank();
  bool structure_ok = true;

  std::set<std::string> labels;
  for (const auto& c : lat.centers) {
    const std::string cs = subj + " center " + c.label;
    if (!labels.insert(c.label).second) {
      diag.add(cs, "center label", "duplicate center label");
      structure_ok = false;
    }
    if (!data.find(c.divisor)) {
      diag.add(cs, "center divisor", "center references undeclared divisor '" + c.divisor + "'");
      structure_ok = false;
    }
    if (c.dim < 0 || c.dim > lat.n - 2) {
      diag.add(cs, "center dim", "center dimension " + std::to_string(c.dim) + " out of range");
    }
    if (c.delta != 0 && c.delta != 1) diag.add(cs, "delta in {0,1}", "delta = " + std::to_string(c.delta));
    for (const auto& p : c.proximities()) {
      // proximities must point at earlier centers
      auto idx = lat.center_index(p);
      auto self = lat.center_index(c.label);
      if (!idx || !self || *idx >= *self) {
        diag.add(cs, "proximity", "proximate center '" + p + "' is not an earlier center");
        structure_ok = false;
      }
    }
  }

  for (const auto& [id, cls] : lat.restrictions) {
    if (!data.find(id)) {
      diag.add(subj, "restriction key", "restriction declared for undeclared divisor '" + id + "'");
      structure_ok = false;
    }
    if (cls.rank() != rank) {
      diag.add(subj, "class rank", "restriction of " + id + " has " + std::to_string(cls.rank()) +
                                       " coordinates, expected " + std::to_string(rank));
      structure_ok = false;
    }
  }
  for (std::size_t g = 0; g < lat.effective_cone.size(); ++g) {
    if (lat.effective_cone[g].rank() != rank) {
      diag.add(subj, "class rank", "effective cone generator " + std::to_string(g) + " has wrong rank");
      structure_ok = false;
    }
  }
  for (const auto& f : lat.curve_families) {
    if (f.pairings.size() != rank) {
      diag.add(subj, "curve family rank", "family " + f.name + " has wrong pairing length");
    }
    if (std::all_of(f.pairings.begin(), f.pairings.end(), [](std::int64_t v) { return v == 0; })) {
      diag.add(subj, "curve family nonzero", "family " + f.name + " has an all-zero pairing vector");
    }
  }
  if (!structure_ok) return;

  const MultiplicityMap mults = multiplicities(data);
  bool history_ok = true;
  if (lat.history) {
    for (const auto& comp : lat.history->components) {
      if (!data.find(comp.divisor)) {
        diag.add(subj, "history component", "component references undeclared divisor '" + comp.divisor + "'");
        history_ok = false;
      }
      for (const auto& [label, _] : comp.mu) {
        if (!lat.center(label)) {
          diag.add(subj, "history component", "mu references unknown center '" + label + "'");
          history_ok = false;
        }
      }
    }
    if (history_ok) {
      for (const auto& v : history_violations(lat, *lat.history, owner->mult, mults)) {
        diag.add(subj, "blow-up history", v);
        history_ok = false;
      }
    }
    if (history_ok) {
      std::set<std::string> mentioned;
      for (const auto& comp : lat.history->components) mentioned.insert(comp.divisor);
      for (const auto& c : lat.centers) mentioned.insert(c.divisor);
      for (const auto& id : mentioned) {
        const PicClass* declared = lat.restriction(id);
        const PicClass derived = history_restriction(lat, *lat.history, id);
        if (declared && *declared != derived) {
          diag.add(subj, "history vs restriction",
                   id + "|_E declared as " + to_string(*declared) + " but history gives " + to_string(derived));
        }
      }
      const PicClass* declared_self = lat.restriction(key);
      const PicClass derived_self = self_restriction(lat, *lat.history, owner->mult, mults);
      if (declared_self && *declared_self != derived_self) {
        diag.add(subj, "E|_E",
                 "declared " + to_string(*declared_self) + " but history gives " + to_string(derived_self));
      }
    }
  }

  // pi^*D|_E = 0
  const PicClass* declared_self = lat.restriction(key);
  std::optional<PicClass> self;
  if (declared_self) {
    self = *declared_self;
  } else if (lat.history && history_ok) {
    self = self_restriction(lat, *lat.history, owner->mult, mults);
  }
  if (self) {
    PicClass total = owner->mult * *self;
    for (const auto& [id, cls] : lat.restrictions) {
      if (id == key) continue;
      total += mults.at(id) * cls;
    }
    if (!total.is_zero()) {
      diag.add(subj, "pi*D|_E = 0", "sum of a_i E_i|_E = " + to_string(total) + ", expected 0");
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const ResolutionData& data) {
  Collector diag;
  if (data.ambient_dim < 2) diag.add("ambient_dim", "n >= 2", "ambient dimension " + std::to_string(data.ambient_dim));
  check_divisors(data, diag);
  if (!diag.empty()) return diag.take();
  check_dual_graph(data, diag);
  for (const auto& [key, lat] : data.lattices) check_lattice(data, key, lat, diag);
  return diag.take();
}

std::map<std::string, std::int64_t> self_intersections(const ResolutionData& data) {
  if (!data.is_surface()) throw DomainError("self-intersections are only defined for surface resolutions");
  if (!data.dual_graph) throw ConfigurationError("surface resolution without a dual graph");
  std::map<std::string, std::int64_t> out;
  for (const auto& d : data.divisors) {
    if (!d.is_exceptional()) continue;
    const std::int64_t w = neighbour_weight(data, d.id);
    if (w % d.mult != 0) {
      throw DataError("inconsistent data at " + d.id + ": sum of a_F (F." + d.id + ") = " + std::to_string(w) +
                      " is not divisible by a = " + std::to_string(d.mult));
    }
    out[d.id] = -(w / d.mult);
  }
  return out;
}

std::vector<std::vector<Rational>> exceptional_intersection_matrix(const ResolutionData& data) {
  const auto ids = exceptional_ids(data);
  const auto self = self_intersections(data);
  std::vector<std::vector<Rational>> m(ids.size(), std::vector<Rational>(ids.size(), Rational(0)));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      m[i][j] = i == j ? Rational(self.at(ids[i])) : Rational(edge_intersection(data, ids[i], ids[j]));
    }
  }
  return m;
}

bool is_negative_definite(const std::vector<std::vector<Rational>> & m) {
  // Without pivoting, the k-th pivot is det(M_k)/det(M_{k-1}); alternating signs of the
  // leading minors is the same as every pivot being negative.
  auto a = m;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].size() != n) return false;
    if (a[k][k].sign() >= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

}  // namespace jumpnum

#pragma once

// Random consistent blow-up data around one exceptional divisor E isomorphic to P^{n-1}.

#include <random>
#include <string>

#include "jumpnum/model.hpp"

namespace testing_support {

struct RandomCase {
  jumpnum::ResolutionData data;
  std::int64_t d = 0;                  // total degree of the other components on E
  std::vector<std::int64_t> mu;        // per center
};

/// E with no centers: components D_j of degree d_j on E. Multiplicities a = sum d_j r_j and
/// a_j = m_j a + r_j make pi*D.E vanish and satisfy the history relation.
inline RandomCase random_plain_case(std::mt19937_64& rng, std::int64_t n) {
  using namespace jumpnum;
  std::uniform_int_distribution<std::int64_t> comps(1, 4), deg(1, 3), mm(0, 2), rr(1, 4);
  for (;;) {
    RandomCase c;
    const auto count = comps(rng);
    std::vector<std::int64_t> ds, ms, rs;
    std::int64_t a = 0;
    for (std::int64_t j = 0; j < count; ++j) {
      ds.push_back(deg(rng));
      ms.push_back(n == 2 ? 0 : mm(rng));  // on a surface adjunction forces E^2 = -1
      rs.push_back(rr(rng));
      a += ds.back() * rs.back();
    }
    if (a < 2) continue;
    auto& data = c.data;
    data.ambient_dim = n;
    data.divisors.push_back({"E", "E", a, n - 1, DivisorKind::exceptional});
    ExcDivLattice lat;
    lat.divisor_id = "E";
    lat.n = n;
    lat.flags.created_by_point_blowup = true;
    lat.flags.effectivity_as_Q_divisor = true;
    BlowupHistory hist;
    std::int64_t dm = 0;
    for (std::int64_t j = 0; j < count; ++j) {
      const std::string id = "D" + std::to_string(j);
      data.divisors.push_back({id, id, ms[j] * a + rs[j], 0, DivisorKind::strict_transform});
      lat.restrictions.emplace_back(id, PicClass({ds[j]}));
      hist.components.push_back({id, ds[j], {}, ms[j], {}});
      dm += ds[j] * ms[j];
      c.d += ds[j];
    }
    lat.restrictions.emplace_back("E", PicClass({-(1 + dm)}));
    lat.history = hist;
    if (n == 2) {
      std::vector<DualGraphEdge> edges;
      for (std::int64_t j = 0; j < count; ++j) edges.push_back({"E", "D" + std::to_string(j), ds[j]});
      data.dual_graph = edges;
    }
    data.lattices.emplace("E", lat);
    return c;
  }
}

/// P^2 blown up at r distinct collinear points; component j has degree d_j and multiplicity
/// mu_jl at point l with sum_l mu_jl <= d_j, all m = 0 so a_j = r_j, a = sum d_j a_j and
/// a_l = sum_j mu_jl a_j. Cases with a_l = 0 or a_l >= a are redrawn.
inline RandomCase random_collinear_case(std::mt19937_64& rng) {
  using namespace jumpnum;
  std::uniform_int_distribution<std::int64_t> comps(1, 4), deg(1, 4), pts(1, 3), rr(1, 3);
  for (;;) {
    RandomCase c;
    const auto count = comps(rng), r = pts(rng);
    std::vector<std::int64_t> ds, as;
    std::vector<std::vector<std::int64_t>> mus;
    std::int64_t a = 0;
    for (std::int64_t j = 0; j < count; ++j) {
      ds.push_back(deg(rng));
      as.push_back(rr(rng));
      a += ds.back() * as.back();
      std::vector<std::int64_t> mu(static_cast<std::size_t>(r), 0);
      std::int64_t budget = ds.back();
      for (auto& m : mu) {
        m = std::uniform_int_distribution<std::int64_t>(0, budget)(rng);
        budget -= m;
      }
      mus.push_back(mu);
    }
    std::vector<std::int64_t> al(static_cast<std::size_t>(r), 0);
    bool ok = a >= 2;
    c.mu.assign(static_cast<std::size_t>(r), 0);
    for (std::int64_t l = 0; l < r; ++l) {
      for (std::int64_t j = 0; j < count; ++j) {
        al[l] += mus[j][l] * as[j];
        c.mu[l] += mus[j][l];
      }
      ok = ok && al[l] > 0 && al[l] < a;
    }
    if (!ok) continue;

    auto& data = c.data;
    data.ambient_dim = 3;
    data.divisors.push_back({"E", "E", a, 2, DivisorKind::exceptional});
    ExcDivLattice lat;
    lat.divisor_id = "E";
    lat.n = 3;
    lat.flags.created_by_point_blowup = true;
    lat.flags.centers_in_hyperplane = true;
    lat.flags.effectivity_as_Q_divisor = true;
    BlowupHistory hist;
    for (std::int64_t l = 0; l < r; ++l) {
      const std::string id = "F" + std::to_string(l);
      data.divisors.push_back({id, id, al[l], 2, DivisorKind::exceptional});
      Center ce;
      ce.label = "p" + std::to_string(l);
      ce.divisor = id;
      lat.centers.push_back(ce);
      hist.center_m[ce.label] = 0;
    }
    for (std::int64_t j = 0; j < count; ++j) {
      const std::string id = "D" + std::to_string(j);
      data.divisors.push_back({id, id, as[j], 0, DivisorKind::strict_transform});
      std::vector<std::int64_t> cls{ds[j]};
      HistoryComponent hc{id, ds[j], {}, 0, {}};
      for (std::int64_t l = 0; l < r; ++l) {
        cls.push_back(-mus[j][l]);
        hc.mu["p" + std::to_string(l)] = mus[j][l];
      }
      lat.restrictions.emplace_back(id, PicClass(cls));
      hist.components.push_back(hc);
      c.d += ds[j];
    }
    for (std::int64_t l = 0; l < r; ++l) {
      std::vector<std::int64_t> cls(static_cast<std::size_t>(r + 1), 0);
      cls[l + 1] = 1;
      lat.restrictions.emplace_back("F" + std::to_string(l), PicClass(cls));
    }
    lat.restrictions.emplace_back("E", PicClass(std::vector<std::int64_t>(static_cast<std::size_t>(r + 1), 0)));
    lat.restrictions.back().second.coeffs[0] = -1;
    lat.history = hist;
    data.lattices.emplace("E", lat);
    return c;
  }
}

}  // namespace testing_support

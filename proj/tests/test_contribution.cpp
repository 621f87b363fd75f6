#include <doctest.h>

#include "jumpnum/candidates.hpp"
#include "jumpnum/contribution.hpp"
#include "jumpnum/validate.hpp"
#include "random_lattices.hpp"
#include "support.hpp"

using namespace jumpnum;
using testing_support::fixture;
using testing_support::R;

namespace {

PicClass P(std::initializer_list<std::int64_t> c) { return PicClass(std::vector<std::int64_t>(c)); }

Rational top(const ResolutionData& data, const std::string& e) { return Rational(1) - Rational(1, data.divisor(e).mult); }

}  // namespace

TEST_CASE("effectivity verdicts on E1 of the seven-three-six threefold") {
  const auto data = fixture("chain736.json");
  const auto no = contributes_by_effectivity(data, "E1", R("6/7"));
  CHECK(no.verdict == Verdict::does_not_contribute);
  CHECK(no.evidence.tested_class == P({0, 0, -1}));
  const auto yes = contributes_by_effectivity(data, "E1", R("3/7"));
  CHECK(yes.verdict == Verdict::contributes);
  CHECK(yes.evidence.tested_class == P({0, 0, 0}));
  REQUIRE(yes.evidence.effectivity);
  CHECK(yes.evidence.effectivity->status == Effectivity::yes);
}

TEST_CASE("contributing 3/7 does not force contributing 1 - 1/a") {
  const auto data = fixture("chain736.json");
  CHECK(contributes(data, {"E1"}, R("3/7")).verdict == Verdict::contributes);
  CHECK(contributes(data, {"E1"}, top(data, "E1")).verdict == Verdict::does_not_contribute);
}

TEST_CASE("same criterion input, opposite verdicts at 1 - 1/a") {
  const auto c61 = fixture("near_points_a6.json");
  const auto d5 = fixture("near_points_d5.json");
  const auto in61 = criterion_input(c61, "E2");
  const auto in62 = criterion_input(d5, "E3");
  CHECK(in61.d == 4);
  CHECK(in62.d == 4);
  CHECK(in61.centers[0].mu == 2);
  CHECK(in61.centers[1].mu == 2);
  CHECK(in62.centers[0].mu == 2);
  CHECK(in62.centers[1].mu == 2);
  CHECK(classify_two_infinitely_near(4, 2, 2).outcome == CriterionOutcome::open_zone);
  CHECK(criteria_report(c61, "E2").result->outcome == CriterionOutcome::open_zone);
  CHECK(criteria_report(d5, "E3").result->outcome == CriterionOutcome::open_zone);
  CHECK(contributes_by_effectivity(c61, "E2", top(c61, "E2")).verdict == Verdict::contributes);
  CHECK(contributes_by_effectivity(d5, "E3", top(d5, "E3")).verdict == Verdict::does_not_contribute);
}

TEST_CASE("E0 of the quartic cone contributes neither candidate") {
  const auto data = fixture("quartic_cone.json");
  const auto at34 = contributes_by_effectivity(data, "E0", R("3/4"));
  CHECK(at34.verdict == Verdict::does_not_contribute);
  CHECK(at34.evidence.tested_class == P({0, 0, -1, 1, 0}));
  const auto at1 = contributes_by_effectivity(data, "E0", Rational(1));
  CHECK(at1.verdict == Verdict::does_not_contribute);
  CHECK(at1.evidence.tested_class == canonical_class(data.lattice("E0")));
  CHECK(necessary_condition(data, "E0").status == Necessary::passes);
  CHECK_FALSE(criteria_report(data, "E0").criterion.has_value());
}

TEST_CASE("necessary condition") {
  const auto data = fixture("chain736.json");
  const auto r = necessary_condition(data, "E1");
  CHECK(r.status == Necessary::passes);
  CHECK(r.cls == P({1, 0, -1}));

  std::mt19937_64 rng(3);
  int low = 0;
  for (int i = 0; i < 200; ++i) {
    const auto c = testing_support::random_plain_case(rng, 3);
    const auto nc = necessary_condition(c.data, "E");
    CHECK(nc.cls == P({c.d - 3}));
    CHECK((nc.status == Necessary::passes) == (c.d >= 4));
    if (c.d == 3) {
      ++low;
      CHECK(nc.status == Necessary::fails);
    }
  }
  CHECK(low > 0);
}

TEST_CASE("closed-form criteria on fixed inputs") {
  CHECK(criterion_pn(3, 4).outcome == CriterionOutcome::contributes);
  CHECK(criterion_pn(3, 3).outcome == CriterionOutcome::contracted);
  CHECK(criterion_pn(2, 3).outcome == CriterionOutcome::contributes);
  CHECK(criterion_pn_centers(3, 5, {{"1", 0, 2}}).outcome == CriterionOutcome::contributes);
  CHECK(criterion_pn_centers(3, 4, {{"1", 0, 3}}).outcome == CriterionOutcome::contracted);
  CHECK(criterion_pn_centers(3, 3, {}).outcome == CriterionOutcome::contracted);
  CHECK(classify_two_infinitely_near(4, 2, 2).outcome == CriterionOutcome::open_zone);
  CHECK(classify_two_infinitely_near(5, 2, 1).outcome == CriterionOutcome::contributes);
  for (std::int64_t m1 = 0; m1 <= 3; ++m1) {
    for (std::int64_t m2 = 0; m2 <= 3; ++m2) CHECK(classify_two_infinitely_near(3, m1, m2).outcome == CriterionOutcome::contracted);
  }
}

TEST_CASE("property: the two-point zones partition the grid") {
  for (std::int64_t d = 0; d <= 12; ++d) {
    for (std::int64_t m1 = 0; m1 <= d; ++m1) {
      for (std::int64_t m2 = 0; m2 <= d; ++m2) {
        const bool contrib = d >= 4 && d - m1 >= 2 && 2 * d - m1 - m2 >= 5;
        const bool contracted = d <= 3 || d - m1 <= 1 || 2 * d - m1 - m2 <= 3;
        CHECK_FALSE((contrib && contracted));
        const auto zone = classify_two_infinitely_near(d, m1, m2).outcome;
        if (contrib) CHECK(zone == CriterionOutcome::contributes);
        else if (contracted) CHECK(zone == CriterionOutcome::contracted);
        else CHECK(zone == CriterionOutcome::open_zone);
      }
    }
  }
}

TEST_CASE("contraction sufficiency") {
  const auto chain = fixture("chain736.json");
  const auto line = contraction_sufficiency(chain, "E1", "general_line", false);
  CHECK(line.pairing == Rational(1));
  CHECK_FALSE(line.fires);
  const auto d5 = fixture("near_points_d5.json");
  const auto conic = contraction_sufficiency(d5, "E3", "conic_through_both_points", false);
  CHECK(conic.cls == P({1, 0, -1}));
  CHECK(conic.pairing == Rational(1));
  CHECK_FALSE(conic.fires);
  CHECK_THROWS_AS(contraction_sufficiency(d5, "E3", "no_such_family", true), ConfigurationError);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing_support::random_plain_case(rng, 4);
    auto data = c.data;
    data.lattices.at("E").curve_families.push_back({"general_line", {1}});
    const auto r = contraction_sufficiency(data, "E", "general_line", false);
    CHECK(r.pairing == Rational(c.d - 4));
    CHECK(r.fires == (c.d <= 4));
    CHECK(contraction_sufficiency(data, "E", "general_line", true).fires == (c.d < 4));
  }
}

TEST_CASE("property: plain projective criterion agrees with effectivity at 1 - 1/a") {
  std::mt19937_64 rng(424242);
  for (std::int64_t n : {2, 3, 4}) {
    for (int i = 0; i < 70; ++i) {
      const auto c = testing_support::random_plain_case(rng, n);
      REQUIRE(validate(c.data).empty());
      const Rational lambda = top(c.data, "E");
      const auto eff = contributes_by_effectivity(c.data, "E", lambda);
      const auto crit = criterion_pn(n, c.d);
      CAPTURE(n);
      CAPTURE(c.d);
      CHECK((eff.verdict == Verdict::contributes) == (crit.outcome == CriterionOutcome::contributes));
      CHECK(criterion_input(c.data, "E").d == c.d);
      if (n == 2) {
        CHECK((contributes(c.data, {"E"}, lambda).verdict == Verdict::contributes) ==
              (crit.outcome == CriterionOutcome::contributes));
      }
    }
  }
}

TEST_CASE("property: centers criterion agrees with effectivity at 1 - 1/a") {
  std::mt19937_64 rng(77);
  int contributing = 0;
  for (int i = 0; i < 200; ++i) {
    const auto c = testing_support::random_collinear_case(rng);
    REQUIRE(validate(c.data).empty());
    const auto rep = criteria_report(c.data, "E");
    REQUIRE(rep.criterion == Method::criterion_pn_centers);
    CHECK(rep.input.d == c.d);
    const auto eff = contributes_by_effectivity(c.data, "E", top(c.data, "E"));
    const bool yes = rep.result->outcome == CriterionOutcome::contributes;
    contributing += yes;
    CHECK((eff.verdict == Verdict::contributes) == yes);
  }
  CHECK(contributing > 0);
}

TEST_CASE("property: a contributing verdict implies the necessary condition") {
  for (const auto& path : testing_support::all_fixture_files()) {
    const auto data = load_fixture(path);
    for (const auto& [id, lat] : data.lattices) {
      for (const auto& lambda : candidates_of(data.divisor(id), Rational(2))) {
        if (contributes_by_effectivity(data, id, lambda).verdict == Verdict::contributes) {
          CAPTURE(path);
          CHECK(necessary_condition(data, id).status == Necessary::passes);
        }
      }
    }
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing_support::random_collinear_case(rng);
    const auto a = c.data.divisor("E").mult;
    for (std::int64_t j = 1; j <= a; ++j) {
      if (contributes_by_effectivity(c.data, "E", Rational(j, a)).verdict == Verdict::contributes) {
        CHECK(necessary_condition(c.data, "E").status == Necessary::passes);
      }
    }
  }
}

TEST_CASE("method selection") {
  const auto data = fixture("chain736.json");
  const auto crit = contributes(data, {"E1"}, R("6/7"), MethodChoice::criterion);
  CHECK(crit.verdict == Verdict::undecidable);
  CHECK(crit.method == Method::criterion_two_infinitely_near);
  CHECK(contributes(data, {"E1"}, R("6/7"), MethodChoice::automatic).method == Method::lattice_effectivity);
  CHECK_THROWS_AS(contributes(data, {"E1"}, R("1/2")), PreconditionError);
  CHECK_THROWS_AS(contributes(data, {"D1"}, R("1/2")), PreconditionError);
  CHECK_THROWS_AS(contributes(data, {"E2"}, R("2/3")), ConfigurationError);
  CHECK(contributes(data, {"E1", "E3"}, Rational(1)).verdict == Verdict::undecidable);

  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const auto c = testing_support::random_plain_case(rng, 3);
    const auto v = contributes(c.data, {"E"}, top(c.data, "E"));
    if (c.d <= 3) CHECK(v.method == Method::necessary_condition_failed);
    else CHECK(v.method == Method::criterion_pn);
    CHECK((v.verdict == Verdict::contributes) == (c.d >= 4));
  }
}

TEST_CASE("surface verdicts go through the degree test") {
  const auto v = contributes(fixture("cusp.json"), {"E3"}, R("5/6"));
  CHECK(v.method == Method::surface_degree);
  CHECK(v.verdict == Verdict::contributes);
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jumpnum/lattice.hpp"
#include "jumpnum/model.hpp"
#include "jumpnum/rational.hpp"
#include "jumpnum/surface.hpp"

namespace jumpnum {

enum class Method {
  surface_degree,
  lattice_effectivity,
  criterion_pn,
  criterion_pn_centers,
  criterion_two_infinitely_near,
  necessary_condition_failed,
};
std::string to_string(Method m);

struct CenterInput {
  std::string label;
  std::int64_t k = 0;   // dimension of the center
  std::int64_t mu = 0;  // total multiplicity of the other components at it
  friend bool operator==(const CenterInput&, const CenterInput&) = default;
};

struct CriterionInput {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t a = 0;
  std::vector<CenterInput> centers;
  friend bool operator==(const CriterionInput&, const CriterionInput&) = default;
};

enum class CriterionOutcome { contributes, contracted, open_zone };
std::string to_string(CriterionOutcome o);

struct CriterionResult {
  CriterionOutcome outcome = CriterionOutcome::open_zone;
  std::vector<std::string> checks;  // each inequality with its values and whether it holds
};

/// d >= n + 1.
CriterionResult criterion_pn(std::int64_t n, std::int64_t d);
/// d >= n + 1 and d - mu_l >= k_l + 2 for every center.
CriterionResult criterion_pn_centers(std::int64_t n, std::int64_t d, const std::vector<CenterInput>& centers);
/// Three zones for P^2 blown up at two infinitely near points.
CriterionResult classify_two_infinitely_near(std::int64_t d, std::int64_t mu1, std::int64_t mu2);

/// d = sum of h-degrees of the restrictions of non-center components, mu_l = minus their e_l sum.
CriterionInput criterion_input(const ResolutionData& data, const std::string& e);

struct Evidence {
  std::optional<PicClass> canonical;          // K_E
  std::optional<PicClass> floor_restriction;  // floor(lambda pi*D)|_E
  std::optional<PicClass> tested_class;       // class whose effectivity decided the verdict
  std::optional<EffectivityResult> effectivity;
  std::optional<SurfaceVerdict> surface;
  std::optional<CriterionInput> input;
  std::vector<std::string> checks;
};

struct ContributionVerdict {
  std::vector<std::string> divisors;
  Rational lambda;
  Verdict verdict = Verdict::undecidable;
  Method method = Method::lattice_effectivity;
  Evidence evidence;
  std::string note;
};

/// K_E - floor(lambda pi*D)|_E effective on E.
ContributionVerdict contributes_by_effectivity(const ResolutionData& data, const std::string& e, const Rational& lambda);

enum class Necessary { passes, fails, unknown };
std::string to_string(Necessary n);

struct NecessaryResult {
  Necessary status = Necessary::unknown;
  PicClass cls;  // K_E + E°|_E
  EffectivityResult effectivity;
  std::string note;
};

/// K_E + E°|_E effective and nonzero.
NecessaryResult necessary_condition(const ResolutionData& data, const std::string& e);

struct ContractionResult {
  bool fires = false;
  Rational pairing;
  PicClass cls;
};

/// (K_E + E°|_E).C against the named family; fires iff < 0 (strict) or <= 0.
ContractionResult contraction_sufficiency(const ResolutionData& data, const std::string& e, const std::string& family,
                                          bool strict);

struct CriteriaReport {
  std::optional<Method> criterion;  // which closed-form criterion applies
  std::string reason;               // why it applies, or why none does
  CriterionInput input;
  std::optional<CriterionResult> result;
  NecessaryResult necessary;
};

CriteriaReport criteria_report(const ResolutionData& data, const std::string& e);

enum class MethodChoice { automatic, effectivity, criterion };

/// Contribution of lambda by the divisor with components `ids`.
ContributionVerdict contributes(const ResolutionData& data, const std::vector<std::string>& ids, const Rational& lambda,
                                MethodChoice choice = MethodChoice::automatic);

}  // namespace jumpnum

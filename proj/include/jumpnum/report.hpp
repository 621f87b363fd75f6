#pragma once

#include <string>

#include "jumpnum/contribution.hpp"
#include "jumpnum/fixture_io.hpp"
#include "jumpnum/model.hpp"

namespace jumpnum {

/// Multi-line human-readable verdict with its evidence.
std::string format_verdict(const ContributionVerdict& v);
Json verdict_json(const ContributionVerdict& v);

std::string format_criteria(const std::string& e, const CriteriaReport& rep);

/// Full per-divisor analysis.
std::string report_text(const ResolutionData& data);
/// The fixture itself plus an "analysis" object; re-parses to the same data.
Json report_json(const ResolutionData& data);
/// Dual graph for surfaces, lattice configuration graph otherwise.
std::string report_dot(const ResolutionData& data);

}  // namespace jumpnum

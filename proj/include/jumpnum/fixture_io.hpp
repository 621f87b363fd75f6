#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "jumpnum/model.hpp"
#include "jumpnum/validate.hpp"

namespace jumpnum {

using Json = nlohmann::ordered_json;

/// Raised by load_fixture when validation reports diagnostics and force is off.
class ValidationFailed : public DataError {
public:
  explicit ValidationFailed(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
  std::vector<Diagnostic> diagnostics_;
};

/// Environment variable holding extra fixture directories, separated by ':'.
inline constexpr const char* kFixturePathVariable = "JUMPNUM_FIXTURE_PATH";

/// Strict schema decoding; unknown keys and wrong types raise ParseError naming the JSON path.
ResolutionData fixture_from_json(const Json& doc);
Json fixture_to_json(const ResolutionData& data);

/// Parses text (ParseError with line and column on malformed JSON). Does not validate.
ResolutionData parse_fixture_text(const std::string& text);

/// Resolves `path` directly or against the directories in JUMPNUM_FIXTURE_PATH.
std::filesystem::path resolve_fixture_path(const std::string& path);

/// Reads, parses and validates a fixture. Throws ValidationFailed on diagnostics unless `force`.
ResolutionData load_fixture(const std::string& path, bool force = false);

}  // namespace jumpnum

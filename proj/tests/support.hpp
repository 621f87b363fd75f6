#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "jumpnum/fixture_io.hpp"
#include "jumpnum/model.hpp"

namespace testing_support {

inline std::string fixture_path(const std::string& name) { return std::string(JUMPNUM_FIXTURE_DIR) + "/" + name; }

inline jumpnum::ResolutionData fixture(const std::string& name) { return jumpnum::load_fixture(fixture_path(name)); }

/// Every shipped fixture file, sorted.
inline std::vector<std::string> all_fixture_files() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(JUMPNUM_FIXTURE_DIR)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline jumpnum::Rational R(const char* text) { return jumpnum::Rational::parse(text); }

}  // namespace testing_support

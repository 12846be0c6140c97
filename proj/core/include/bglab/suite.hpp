#ifndef BGLAB_SUITE_HPP_
#define BGLAB_SUITE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace bglab {

  enum class SuiteProfile { quick, full };
  SuiteProfile profile_from_string(std::string_view name);

  struct SuiteEntry {
    std::string   id;
    std::string   anchor;  // the property the check establishes
    bool          passed    = false;
    bool          mandatory = true;
    std::uint64_t evaluations = 0;
    double        seconds     = 0;
    std::string   detail;
  };

  struct SuiteReport {
    SuiteProfile            profile = SuiteProfile::quick;
    std::uint64_t           seed    = 1;
    std::vector<SuiteEntry> entries;  // sorted by id
    bool                    passed = false;

    nlohmann::json to_json() const;
  };

  //! Runs every verification check. `workers` is handed to the identity
  //! checkers (0 = hardware concurrency); results do not depend on it.
  SuiteReport run_suite(SuiteProfile profile, unsigned workers = 0, std::uint64_t seed = 1);

}  // namespace bglab

#endif  // BGLAB_SUITE_HPP_

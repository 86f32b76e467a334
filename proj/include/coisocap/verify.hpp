#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coisocap::verify {

struct CheckResult {
  CheckResult(std::string name_, std::string range_) : name(std::move(name_)), range(std::move(range_)) {}

  std::string name;
  std::string range;
  std::int64_t pass_count = 0;
  std::int64_t fail_count = 0;
  std::optional<std::string> first_failure;  // input tuple of the first violation

  // Counts one evaluation; `input` is only rendered on the first failure.
  template <class Describe>
  void record(bool ok, Describe&& input) {
    if (ok) {
      ++pass_count;
    } else {
      if (fail_count++ == 0) first_failure = input();
    }
  }
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by name
  std::int64_t wall_time_ms = 0;

  bool ok() const;
};

enum class Suite { kfun_props, oracle, bounds_props, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

// Sweeps the module invariants over n in [1, nmax], d in [0, dmax]. Checks run
// concurrently; the report does not depend on scheduling.
VerifyReport run(Suite suite, std::int64_t nmax, std::int64_t dmax);

}  // namespace coisocap::verify

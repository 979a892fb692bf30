#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qtwist/numerics.hpp"

namespace qtwist::cli {

struct SuiteResult {
  std::string identity;
  long cases = 0;
  long failures = 0;
  std::optional<Real> max_deviation;  // absent for purely structural checks
  std::string detail;

  bool passed() const { return cases > 0 && failures == 0; }
};

struct Suite {
  std::string_view name;
  std::string_view summary;
  SuiteResult (*run)();
};

/// Every identity suite, in a fixed order.
std::span<const Suite> suites();

/// Lookup by name or alias; nullptr if unknown.
const Suite* find_suite(std::string_view name);

}  // namespace qtwist::cli

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sqw/linalg.hpp"

namespace sqw {

struct RelationCheck {
  std::string name;
  bool passed = false;
  double max_abs_error = 0.0;
};

/// Outcome of checking a list of operator identities. Generator matrices have
/// entries in {0, +-1, +-i}, so every identity is checked with exact equality.
class RelationReport {
 public:
  void expect_equal(std::string name, const Mat4& lhs, const Mat4& rhs) {
    checks_.push_back({std::move(name), lhs == rhs, max_abs_diff(lhs, rhs)});
  }

  void expect(std::string name, bool passed, double error = 0.0) {
    checks_.push_back({std::move(name), passed, error});
  }

  const std::vector<RelationCheck>& checks() const noexcept { return checks_; }

  bool all_passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const auto& c) { return c.passed; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return !c.passed; }));
  }

 private:
  std::vector<RelationCheck> checks_;
};

}  // namespace sqw

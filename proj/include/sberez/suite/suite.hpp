// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sberez/suite/common.hpp"

namespace sberez {

struct SuiteConfig {
  int m = 1, n = 1;
  int order = 6;  // series order for crossing; relation and HC expansions are capped lower
  int kcap = 3;   // largest number of auxiliary copies for fusion, symmetrizers and MacMahon
  uint64_t seed = 1;
  int points = 3;
  Mode mode = Mode::Auto;
  std::string format = "text";
  int threads = 0;  // 0: hardware concurrency
};

struct SuiteResult {
  std::vector<CheckReport> checks;  // sorted by name
  int pass = 0, fail = 0, skipped = 0;
  int errors = 0;  // checks aborted by an internal arithmetic error
};

const std::vector<std::string>& suite_groups();
bool is_suite_group(const std::string& g);

// Names of the checks a group runs for this configuration, in report order.
std::vector<std::string> suite_check_names(const std::string& group, const SuiteConfig& cfg);

// Runs the group on a worker pool. on_report, if given, is called from the
// calling thread in name order as soon as each report and all reports
// before it are done.
SuiteResult run_suite(const std::string& group, const SuiteConfig& cfg,
                      const std::function<void(const CheckReport&)>& on_report = {});

json suite_json(const std::string& group, const SuiteConfig& cfg, const SuiteResult& res, bool with_timing = true);

// Working operator size above which Auto switches from symbolic z to points.
constexpr long kSymbolicLimit = 81;
Mode resolve_mode(Mode requested, const GradedDim& dim, long working_dim);

}  // namespace sberez

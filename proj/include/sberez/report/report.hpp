// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "sberez/tensor/mat.hpp"

namespace sberez {

using json = nlohmann::json;

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

// One assertion inside a check. Informational items are recorded but do not
// affect the verdict.
struct SubResult {
  std::string label;
  bool ok = true;
  bool informational = false;
  json witness;
};

struct CheckReport {
  std::string name;
  json params = json::object();
  Status status = Status::Pass;
  std::string reason;
  std::vector<SubResult> subs;
  json data = json::object();
  double duration_ms = 0;

  // Adds an assertion; returns ok.
  bool expect(const std::string& label, bool ok, json witness = nullptr);
  void note(const std::string& label, bool ok, json witness = nullptr);
  void skip(const std::string& why);
  // Sets status from the required assertions.
  void finish();
  // True unless skipped, marked failed, or holding a failed required
  // assertion, whether or not finish() has run.
  bool passed() const;
};

json to_json(const CheckReport& r, bool with_timing = true);
// One line per check; details adds a line per failed or informational
// assertion.
std::string to_text(const CheckReport& r, bool details = false);

// First entry where two matrices differ, rendered.
template <class F>
json mat_witness(const Mat<F>& a, const Mat<F>& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return json{{"entry", {i, j}}, {"lhs", render(a(i, j))}, {"rhs", render(b(i, j))}};
  return nullptr;
}

template <class F>
bool expect_mat(CheckReport& r, const std::string& label, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return r.expect(label, false, json{{"shape", "mismatch"}});
  bool ok = a == b;
  return r.expect(label, ok, ok ? json(nullptr) : mat_witness(a, b));
}

template <class F>
void note_mat(CheckReport& r, const std::string& label, const Mat<F>& a, const Mat<F>& b) {
  bool ok = a.rows() == b.rows() && a.cols() == b.cols() && a == b;
  r.note(label, ok, ok || a.rows() != b.rows() ? json(nullptr) : mat_witness(a, b));
}

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace sberez

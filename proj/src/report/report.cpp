// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/report/report.hpp"

#include <sstream>

namespace sberez {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

bool CheckReport::expect(const std::string& label, bool ok, json witness) {
  subs.push_back({label, ok, false, std::move(witness)});
  return ok;
}

void CheckReport::note(const std::string& label, bool ok, json witness) {
  subs.push_back({label, ok, true, std::move(witness)});
}

void CheckReport::skip(const std::string& why) {
  status = Status::Skipped;
  reason = why;
}

void CheckReport::finish() {
  if (status == Status::Skipped && subs.empty()) return;
  bool any = false, ok = true;
  for (const auto& s : subs) {
    if (s.informational) continue;
    any = true;
    if (!s.ok) {
      ok = false;
      if (reason.empty()) reason = s.label;
    }
  }
  if (!any && status == Status::Skipped) return;
  status = ok ? Status::Pass : Status::Fail;
}

bool CheckReport::passed() const {
  if (status != Status::Pass) return false;
  for (const auto& s : subs)
    if (!s.informational && !s.ok) return false;
  return true;
}

json to_json(const CheckReport& r, bool with_timing) {
  json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["status"] = status_name(r.status);
  if (!r.reason.empty()) j["reason"] = r.reason;
  json subs = json::array();
  for (const auto& s : r.subs) {
    json x{{"label", s.label}, {"ok", s.ok}};
    if (s.informational) x["info"] = true;
    if (!s.witness.is_null()) x["witness"] = s.witness;
    subs.push_back(x);
  }
  j["assertions"] = subs;
  if (!r.data.empty()) j["data"] = r.data;
  if (with_timing) j["duration_ms"] = static_cast<long>(r.duration_ms);
  return j;
}

std::string to_text(const CheckReport& r, bool details) {
  std::ostringstream os;
  os << status_name(r.status) << "  " << r.name;
  if (!r.params.empty()) os << " " << r.params.dump();
  if (!r.reason.empty()) os << "  (" << r.reason << ")";
  if (details) os << "  [" << static_cast<long>(r.duration_ms) << " ms]";
  for (const auto& s : r.subs) {
    if (!details || (s.ok && !s.informational)) continue;
    os << "\n    " << (s.informational ? "info " : "FAIL ") << (s.ok ? "holds: " : "fails: ") << s.label;
    if (!s.witness.is_null()) os << " " << s.witness.dump();
  }
  return os.str();
}

}  // namespace sberez

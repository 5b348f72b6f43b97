// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner. Prints one line per criterion and exits with status 1
// if any criterion fails, 0 otherwise. All comparisons are exact: a
// criterion passes only when every required assertion has zero residual.
//
// Arguments, if given, select criteria by number.
//
// Criterion 14 runs the command line tool named by $SBEREZ_CLI twice; when
// the variable is unset it compares two in-process runs instead.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "sberez/suite/checks.hpp"
#include "sberez/suite/suite.hpp"

namespace {

using namespace sberez;

struct Dims {
  int m, n;
};

const std::vector<Dims> kRepDims = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};

std::vector<Dims> dims_up_to(int total) {
  std::vector<Dims> out;
  for (int s = 1; s <= total; ++s)
    for (int m = s; m >= 0; --m) out.push_back({m, s - m});
  return out;
}

uint64_t seed() {
  const char* env = std::getenv("SBEREZ_SEED");
  return env && *env ? std::strtoull(env, nullptr, 10) : 1;
}

SuiteConfig config(Dims d) {
  SuiteConfig cfg;
  cfg.m = d.m;
  cfg.n = d.n;
  cfg.seed = seed();
  return cfg;
}

// Outcome of one criterion: required assertions seen and failed.
struct Tally {
  int checks = 0, failed = 0, skipped = 0;
  std::vector<std::string> failures;

  void add(const std::string& what, bool ok) {
    ++checks;
    if (!ok) {
      ++failed;
      failures.push_back(what);
    }
  }
  void add(const CheckReport& r) {
    if (r.status == Status::Skipped) {
      ++skipped;
      failures.push_back(r.name + " skipped (" + r.reason + ")");
      return;
    }
    add(label(r), r.passed());
  }
  // Only the required assertions whose label satisfies pred.
  void add_filtered(const CheckReport& r, const std::function<bool(const std::string&)>& pred) {
    bool ok = r.status != Status::Skipped;
    int seen = 0;
    for (const auto& s : r.subs) {
      if (s.informational || !pred(s.label)) continue;
      ++seen;
      ok = ok && s.ok;
    }
    if (r.reason.rfind("internal error", 0) == 0) ok = false;
    add(label(r), ok && seen > 0);
  }
  static std::string label(const CheckReport& r) {
    std::string dims = "(" + r.params.value("m", json(0)).dump() + "," + r.params.value("n", json(0)).dump() + ")";
    if (r.params.contains("rep")) {
      const json& rep = r.params["rep"];
      dims = "(" + rep["m"].dump() + "," + rep["n"].dump() + ")";
    }
    return r.name + dims;
  }
};

std::vector<CheckReport> run(const std::string& group, Dims d, const std::vector<std::string>& names) {
  SuiteResult res = run_suite(group, config(d));
  std::vector<CheckReport> out;
  for (auto& r : res.checks)
    for (const auto& n : names)
      if (r.name == n) out.push_back(r);
  if (out.size() != names.size()) throw std::runtime_error("missing checks in suite " + group);
  return out;
}

bool is_zeta_central(const std::string& label) {
  return label.rfind("zeta", 0) == 0 &&
         (label.find("commutes") != std::string::npos || label.find("acts by a scalar") != std::string::npos);
}

std::string run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot run " + cli);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  pclose(p);
  return out;
}

void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("duration_ms");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no time limit
  std::function<void(Tally&)> body;
};

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;
  c.push_back({1, "QYBE, 1 <= M+N <= 4", 30, [](Tally& t) {
                 for (Dims d : dims_up_to(4)) t.add(check_qybe(GradedDim(d.m, d.n)));
               }});
  c.push_back({2, "Hecke relations and symmetrizers m <= 4, M+N <= 3", 60, [](Tally& t) {
                 for (Dims d : dims_up_to(3)) {
                   GradedDim dim(d.m, d.n);
                   t.add(check_hecke(dim));
                   t.add(check_symmetrizers(dim, 4));
                 }
               }});
  c.push_back({3, "unitarity and a single q-flip reading, M+N <= 3", 0, [](Tally& t) {
                 for (Dims d : dims_up_to(3)) t.add(check_unitarity_qflip(GradedDim(d.m, d.n)));
               }});
  c.push_back({4, "crossing with extracted g, M+N <= 3; normalized to order 6", 0, [](Tally& t) {
                 for (Dims d : dims_up_to(3)) t.add(check_crossing(GradedDim(d.m, d.n), 6));
               }});
  c.push_back({5, "RLL relations in evaluation and tensor modules", 120, [](Tally& t) {
                 for (Dims d : kRepDims)
                   for (auto& r : run("relations", d,
                                      {"relations.master.eval", "relations.master.tensor", "relations.rep.eval",
                                       "relations.rep.tensor"}))
                     t.add(r);
               }});
  c.push_back({6, "Berezinian permutation-sum form = fusion form", 0, [](Tally& t) {
                 for (Dims d : kRepDims)
                   for (auto& r : run("berezinian", d, {"berezinian.double.eval", "berezinian.double.tensor"})) t.add(r);
               }});
  c.push_back({7, "centrality of B and zeta coefficients, scalar action", 0, [](Tally& t) {
                 for (Dims d : kRepDims) {
                   for (auto& r : run("berezinian", d, {"berezinian.centrality.eval", "berezinian.centrality.tensor"}))
                     t.add(r);
                   for (auto& r : run("zeta", d, {"zeta.eval", "zeta.tensor"})) t.add_filtered(r, is_zeta_central);
                 }
               }});
  c.push_back({8, "zeta: lltr = entrywise formula, trace formulas for M != N, QLL", 0, [](Tally& t) {
                 for (Dims d : kRepDims)
                   for (auto& r : run("zeta", d, {"zeta.eval", "zeta.tensor"}))
                     t.add_filtered(r, [](const std::string& l) { return !is_zeta_central(l); });
               }});
  c.push_back({9, "Liouville identity and block commutation", 0, [](Tally& t) {
                 for (Dims d : kRepDims)
                   for (auto& r : run("liouville", d, {"liouville.eval", "liouville.tensor"})) t.add(r);
               }});
  c.push_back({10, "decomposition, Jacobi, Schur complement, Sylvester k = 1, 2", 300, [](Tally& t) {
                 for (Dims d : kRepDims) {
                   std::vector<std::string> names = {"minors.decomposition.eval", "minors.decomposition.tensor",
                                                     "minors.schur.eval", "minors.schur.tensor"};
                   if (!(d.m == 1 && d.n == 1)) {
                     names.push_back("minors.jacobi.eval");
                     names.push_back("minors.jacobi.tensor");
                   }
                   for (auto& r : run("minors", d, names)) t.add(r);
                   for (auto& r : run("sylvester", d, {"sylvester.k1.eval", "sylvester.k2.eval"})) t.add(r);
                 }
               }});
  c.push_back({11, "MacMahon identities, k <= 3, on (1,1) and (2,1)", 0, [](Tally& t) {
                 for (Dims d : {Dims{1, 1}, Dims{2, 1}})
                   for (auto& r : run("macmahon", d, {"macmahon.k1.eval", "macmahon.k2.eval", "macmahon.k3.eval"}))
                     t.add(r);
               }});
  c.push_back({12, "Harish-Chandra image: K = 2 on (1,1), K = 1 on (2,1)", 0, [](Tally& t) {
                 t.add(check_hc_image(GradedDim(1, 1), 2));
                 t.add(check_hc_image(GradedDim(2, 1), 1));
               }});
  c.push_back({13, "omega on (1,1), (2,1); rho between (2,1) and (1,2)", 0, [](Tally& t) {
                 for (Dims d : {Dims{1, 1}, Dims{2, 1}})
                   for (auto& r : run("morphisms", d, {"morphisms.omega.eval", "morphisms.omega.tensor"})) t.add(r);
                 for (Dims d : {Dims{2, 1}, Dims{1, 2}})
                   for (auto& r : run("morphisms", d, {"morphisms.rho.eval"})) t.add(r);
               }});
  c.push_back({14, "determinism of verify all with a fixed seed", 0, [](Tally& t) {
                 for (Dims d : {Dims{1, 1}, Dims{2, 1}}) {
                   std::string what = "verify all (" + std::to_string(d.m) + "," + std::to_string(d.n) + ")";
                   json a, b;
                   if (const char* cli = std::getenv("SBEREZ_CLI"); cli && *cli) {
                     std::string args = "verify all --format json --seed " + std::to_string(seed()) + " --m " +
                                        std::to_string(d.m) + " --n " + std::to_string(d.n);
                     a = json::parse(run_cli(cli, args + " --threads 1"));
                     b = json::parse(run_cli(cli, args));
                   } else {
                     SuiteConfig one = config(d), many = config(d);
                     one.threads = 1;
                     a = suite_json("all", one, run_suite("all", one));
                     b = suite_json("all", many, run_suite("all", many));
                   }
                   strip_timing(a);
                   strip_timing(b);
                   t.add(what, a == b && a.dump() == b.dump());
                 }
               }});
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Tally t;
    Stopwatch sw;
    std::string error;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double s = sw.ms() / 1000.0;
    bool in_time = c.limit_s == 0 || s < c.limit_s;
    bool ok = error.empty() && t.failed == 0 && t.skipped == 0 && t.checks > 0 && in_time;
    if (!ok) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << (c.id < 10 ? " " : "") << c.id << "  " << (ok ? "PASS" : "FAIL") << "  " << c.title
         << "  [" << (t.checks - t.failed) << "/" << t.checks << " exact, residual 0 required; " << s << " s";
    if (c.limit_s > 0) line << " of " << c.limit_s << " s";
    line << "]";
    if (!error.empty()) line << "  error: " << error;
    if (!in_time) line << "  over time limit";
    if (!t.failures.empty()) {
      line << "  failing:";
      for (const auto& f : t.failures) line << " " << f;
    }
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}

// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/suite/suite.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "sberez/rtt/abstract.hpp"
#include "sberez/suite/checks.hpp"

namespace sberez {

namespace {

struct Task {
  std::string name;
  std::function<CheckReport()> run;
};

struct Context {
  SuiteConfig cfg;
  GradedDim dim;
  Rational q;
  RepDesc eval, tensor;
};

RepDesc make_rep(const GradedDim& dim, int factors, uint64_t seed, const std::string& key) {
  Rng rng(seed, key);
  return random_rep(dim, factors, rng);
}

// Free-algebra expansion order for the HC check, kept small in large ranks.
int hc_order(const GradedDim& dim, int order) {
  int cap = dim.n() <= 2 ? 2 : dim.n() == 3 ? 1 : 0;
  return std::min(order, cap);
}

void add(std::vector<Task>& ts, const std::string& name, std::function<CheckReport()> f) {
  ts.push_back({name, std::move(f)});
}

std::vector<Task> group_tasks(const std::string& g, const Context& c) {
  std::vector<Task> ts;
  const SuiteConfig& cfg = c.cfg;
  const GradedDim dim = c.dim;
  const Rational q = c.q;
  const int pts = cfg.points;
  const uint64_t seed = cfg.seed;
  auto mode_for = [&](const RepDesc& rep, int aux) {
    return resolve_mode(cfg.mode, rep.dim, static_cast<long>(rep.w_dim()) * ipow(rep.dim.n(), aux));
  };
  // Each check draws its points from a generator keyed by its own name.
  auto with_rng = [seed](const std::string& name, auto f) {
    return [seed, name, f]() {
      Rng rng(seed, name);
      return f(rng);
    };
  };
  auto per_rep = [&](const std::string& base, int aux, auto f) {
    for (const RepDesc* rep : {&c.eval, &c.tensor}) {
      std::string name = base + "." + rep->type();
      Mode m = mode_for(*rep, aux);
      RepDesc rp = *rep;
      add(ts, name, with_rng(name, [rp, m, q, pts, f](Rng& rng) { return f(rp, q, m, rng, pts); }));
    }
  };

  if (g == "rmatrix") {
    add(ts, "rmatrix.qybe", [dim] { return check_qybe(dim); });
    add(ts, "rmatrix.unitarity", [dim] { return check_unitarity_qflip(dim); });
    add(ts, "rmatrix.crossing", [dim, K = cfg.order] { return check_crossing(dim, K); });
    add(ts, "rmatrix.hecke", [dim] { return check_hecke(dim); });
  } else if (g == "hecke") {
    add(ts, "rmatrix.hecke", [dim] { return check_hecke(dim); });
    int mcap = std::min(cfg.kcap + 1, dim.n() <= 3 ? 4 : 3);
    add(ts, "rmatrix.symmetrizers", [dim, mcap] { return check_symmetrizers(dim, mcap); });
    for (int m = 2; m <= cfg.kcap; ++m) {
      std::string name = "rmatrix.fusion.m" + std::to_string(m);
      RepDesc rep = c.eval;
      Mode md = mode_for(rep, m);
      add(ts, name, with_rng(name, [rep, q, m, md, pts](Rng& rng) { return check_fusion(rep, q, m, md, rng, pts); }));
    }
  } else if (g == "relations") {
    per_rep("relations.rep", 2, [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_rep_relations(r, q, m, rng, p);
    });
    int K = std::min(cfg.order, 2);
    for (const RepDesc* rep : {&c.eval, &c.tensor}) {
      RepDesc rp = *rep;
      add(ts, "relations.master." + rp.type(), [rp, q, K] { return check_master_relations(rp, q, K); });
    }
  } else if (g == "berezinian") {
    per_rep("berezinian.double", dim.n(), [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_ber_double(r, q, m, rng, p);
    });
    per_rep("berezinian.centrality", 1, [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_centrality(r, q, m, rng, p, 4);
    });
  } else if (g == "zeta") {
    per_rep("zeta", 2, [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_zeta(r, q, m, rng, p);
    });
  } else if (g == "liouville") {
    per_rep("liouville", 1, [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_liouville(r, q, m, rng, p);
    });
  } else if (g == "minors") {
    per_rep("minors.decomposition", 1, [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_decomposition(r, q, m, rng, p);
    });
    per_rep("minors.jacobi", 1, [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_jacobi(r, q, m, rng, p);
    });
    per_rep("minors.schur", 1, [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_schur(r, q, m, rng, p);
    });
  } else if (g == "sylvester") {
    for (int k = 1; k <= 2; ++k) {
      std::string name = "sylvester.k" + std::to_string(k) + ".eval";
      RepDesc big = make_rep(GradedDim(dim.M + k, dim.N), 1, seed, "rep.enlarged.k" + std::to_string(k));
      Mode md = mode_for(big, 1);
      add(ts, name, with_rng(name, [k, big, q, md, pts](Rng& rng) { return check_sylvester(k, big, q, md, rng, pts); }));
    }
  } else if (g == "macmahon") {
    for (int k = 1; k <= cfg.kcap; ++k) {
      std::string name = "macmahon.k" + std::to_string(k) + ".eval";
      RepDesc rep = c.eval;
      Mode md = mode_for(rep, k);
      add(ts, name, with_rng(name, [rep, q, k, md, pts](Rng& rng) { return check_macmahon(rep, q, k, md, rng, pts); }));
    }
  } else if (g == "hc") {
    int K = hc_order(dim, cfg.order);
    add(ts, "hc.image", [dim, K] { return check_hc_image(dim, K); });
  } else if (g == "morphisms") {
    per_rep("morphisms.omega", 2, [](const RepDesc& r, const Rational& q, Mode m, Rng& rng, int p) {
      return check_omega(r, q, m, rng, p);
    });
    {
      RepDesc rep = c.eval;
      std::string name = "morphisms.rho.eval";
      add(ts, name, with_rng(name, [rep, q, pts](Rng& rng) { return check_rho(rep, q, rng, pts); }));
    }
    for (int k = 1; k <= 2; ++k) {
      std::string name = "morphisms.psi.k" + std::to_string(k) + ".eval";
      RepDesc big = make_rep(GradedDim(dim.M + k, dim.N), 1, seed, "rep.enlarged.k" + std::to_string(k));
      add(ts, name, with_rng(name, [k, big, q, pts](Rng& rng) { return check_psi(big, q, k, rng, pts); }));
    }
  } else if (g == "all") {
    std::set<std::string> seen;
    for (const auto& sub : suite_groups()) {
      if (sub == "all") continue;
      for (auto& t : group_tasks(sub, c))
        if (seen.insert(t.name).second) ts.push_back(std::move(t));
    }
  }
  std::sort(ts.begin(), ts.end(), [](const Task& a, const Task& b) { return a.name < b.name; });
  return ts;
}

Context make_context(const SuiteConfig& cfg) {
  GradedDim dim(cfg.m, cfg.n);
  Rng qr(cfg.seed, "q");
  return Context{cfg, dim, qr.q_value(), make_rep(dim, 1, cfg.seed, "rep.eval"),
                 make_rep(dim, 2, cfg.seed, "rep.tensor")};
}

CheckReport run_task(const Task& t, bool* error) {
  Stopwatch sw;
  CheckReport r;
  try {
    r = t.run();
    r.finish();
  } catch (const std::exception& e) {
    r = CheckReport{};
    r.status = Status::Fail;
    r.reason = std::string("internal error: ") + e.what();
    *error = true;
  }
  r.name = t.name;
  r.duration_ms = sw.ms();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> g{"rmatrix", "hecke",  "relations", "berezinian", "zeta", "liouville",
                                          "minors",  "sylvester", "macmahon", "hc",         "morphisms", "all"};
  return g;
}

bool is_suite_group(const std::string& g) {
  const auto& gs = suite_groups();
  return std::find(gs.begin(), gs.end(), g) != gs.end();
}

Mode resolve_mode(Mode requested, const GradedDim& dim, long working_dim) {
  if (requested != Mode::Auto) return requested;
  return dim.n() <= 3 && working_dim <= kSymbolicLimit ? Mode::Symbolic : Mode::Points;
}

std::vector<std::string> suite_check_names(const std::string& group, const SuiteConfig& cfg) {
  std::vector<std::string> out;
  for (const auto& t : group_tasks(group, make_context(cfg))) out.push_back(t.name);
  return out;
}

SuiteResult run_suite(const std::string& group, const SuiteConfig& cfg,
                      const std::function<void(const CheckReport&)>& on_report) {
  Context ctx = make_context(cfg);
  std::vector<Task> tasks = group_tasks(group, ctx);
  size_t n = tasks.size();
  std::vector<CheckReport> out(n);
  std::vector<char> done(n, 0), errs(n, 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<size_t> next{0};

  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<size_t>(threads, std::max<size_t>(n, 1)));
  auto worker = [&] {
    for (;;) {
      size_t i = next++;
      if (i >= n) return;
      bool err = false;
      CheckReport r = run_task(tasks[i], &err);
      std::lock_guard<std::mutex> lock(mu);
      out[i] = std::move(r);
      errs[i] = err;
      done[i] = 1;
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (size_t i = 0; i < n; ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[i] != 0; });
    lock.unlock();
    if (on_report) on_report(out[i]);
  }
  for (auto& t : pool) t.join();

  SuiteResult res;
  for (size_t i = 0; i < n; ++i) {
    switch (out[i].status) {
      case Status::Pass:
        ++res.pass;
        break;
      case Status::Fail:
        ++res.fail;
        break;
      case Status::Skipped:
        ++res.skipped;
        break;
    }
    res.errors += errs[i];
  }
  res.checks = std::move(out);
  return res;
}

json suite_json(const std::string& group, const SuiteConfig& cfg, const SuiteResult& res, bool with_timing) {
  json checks = json::array();
  for (const auto& c : res.checks) checks.push_back(to_json(c, with_timing));
  return json{{"suite", group},
              {"m", cfg.m},
              {"n", cfg.n},
              {"seed", cfg.seed},
              {"mode", mode_name(cfg.mode)},
              {"checks", checks},
              {"summary", {{"pass", res.pass}, {"fail", res.fail}, {"skipped", res.skipped}}}};
}

}  // namespace sberez

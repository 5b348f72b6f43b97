// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

// sberez: run verification suites and compute Berezinians, central series
// and Harish-Chandra images.
//
// Exit status: 0 when every check passed (or a computation succeeded),
// 1 when some check failed, 2 on a usage error, 3 on an internal error.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sberez/berezinian/berezinian.hpp"
#include "sberez/rtt/abstract.hpp"
#include "sberez/suite/suite.hpp"

namespace {

using namespace sberez;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

Mode parse_mode(const std::string& s) {
  if (s == "symbolic") return Mode::Symbolic;
  if (s == "points") return Mode::Points;
  if (s == "auto") return Mode::Auto;
  throw UsageError("unknown mode: " + s);
}

uint64_t default_seed() {
  const char* env = std::getenv("SBEREZ_SEED");
  if (!env || !*env) return 1;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end) throw UsageError(std::string("SBEREZ_SEED is not an integer: ") + env);
  return v;
}

void check_dims(int m, int n) {
  if (m < 0 || n < 0) throw UsageError("--m and --n must be nonnegative");
  if (m + n < 1) throw UsageError("need M+N >= 1");
  if (m + n > 4) throw UsageError("M+N > 4 is not supported");
}

int run_verify(const std::string& group, SuiteConfig cfg, bool verbose) {
  check_dims(cfg.m, cfg.n);
  if (!is_suite_group(group)) throw UsageError("unknown suite: " + group);
  if (cfg.points < 1) throw UsageError("--points must be positive");
  if (cfg.kcap < 1 || cfg.kcap > 4) throw UsageError("--kcap must be in 1..4");
  if (cfg.order < 0) throw UsageError("--order must be nonnegative");
  bool text = cfg.format == "text";
  auto stream = [&](const CheckReport& r) {
    if (text) std::cout << to_text(r, verbose) << std::endl;
  };
  SuiteResult res = run_suite(group, cfg, stream);
  if (text)
    std::cout << "summary: " << res.pass << " pass, " << res.fail << " fail, " << res.skipped << " skipped"
              << std::endl;
  else
    std::cout << suite_json(group, cfg, res).dump(2) << std::endl;
  if (res.errors > 0) {
    for (const auto& c : res.checks)
      if (c.reason.rfind("internal error", 0) == 0) std::cerr << c.name << ": " << c.reason << "\n";
    return kExitInternal;
  }
  return res.fail == 0 ? 0 : kExitFail;
}

template <class F>
bool scalar_matrix(const Mat<F>& X) {
  for (int i = 0; i < X.rows(); ++i)
    for (int j = 0; j < X.cols(); ++j)
      if (X(i, j) != (i == j ? X(0, 0) : F(0))) return false;
  return true;
}

template <class F>
json render_result(const Mat<F>& X, std::string* text) {
  if (scalar_matrix(X)) {
    *text = render(X(0, 0));
    return *text;
  }
  json rows = json::array();
  std::ostringstream os;
  for (int i = 0; i < X.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < X.cols(); ++j) {
      row.push_back(render(X(i, j)));
      os << (j ? "  " : "") << render(X(i, j));
    }
    os << "\n";
    rows.push_back(row);
  }
  *text = os.str();
  return rows;
}

template <class F>
Mat<F> compute_value(const std::string& what, const RepDesc& rep, const F& q) {
  F z = F::var();
  auto L = rep_lfun(rep, q);
  if (what == "berezinian") return ber_sum(rep.dim, L, z, q);
  return zeta_value(rep.dim, L, z, q);
}

int run_compute(const std::string& what, int m, int n, const std::string& rep_type, const std::string& a,
                const std::string& b, const std::string& qs, int order, bool order_given, const std::string& format) {
  check_dims(m, n);
  GradedDim dim(m, n);
  json out;
  std::string text;
  out["object"] = what;
  out["m"] = m;
  out["n"] = n;
  if (what == "hc-image") {
    int K = order_given ? order : 2;
    if (K < 0 || K > 4) throw UsageError("--order must be in 0..4 for hc-image");
    json fam = json::object();
    std::ostringstream os;
    for (int sign : {+1, -1}) {
      std::string s = sign > 0 ? "+" : "-";
      json coeffs = json::array();
      auto H = hc_formula(dim, sign, K);
      for (int k = 0; k <= K; ++k) {
        coeffs.push_back(H[k].str());
        os << s << " order " << k << ": " << H[k].str() << "\n";
      }
      fam[s] = coeffs;
    }
    out["order"] = K;
    out["value"] = fam;
    text = os.str();
  } else if (what == "berezinian" || what == "zeta") {
    RepDesc rep{dim, parse_list(a), parse_list(b)};
    if (rep.a.empty()) throw UsageError("--a is required");
    if (rep_type == "eval" && rep.a.size() != 1) throw UsageError("an evaluation module takes one --a value");
    if (rep_type == "tensor" && rep.a.size() < 2) throw UsageError("a tensor product needs at least two --a values");
    if (rep_type != "eval" && rep_type != "tensor") throw UsageError("--rep must be eval or tensor");
    if (!rep.b.empty() && rep.b.size() != rep.a.size()) throw UsageError("--b needs one value per --a value");
    for (const auto& x : rep.a)
      if (x == 0) throw UsageError("evaluation parameters must be nonzero");
    out["rep"] = rep_json(rep);
    if (qs.empty()) {
      out["q"] = "q";
      out["value"] = render_result(compute_value(what, rep, ZRat(QRat::var())), &text);
    } else {
      Rational q = parse_rational(qs);
      if (q == 0 || q == 1 || q == -1) throw UsageError("q must not be 0 or +-1");
      out["q"] = q.get_str();
      out["value"] = render_result(compute_value(what, rep, ZRatN(q)), &text);
    }
  } else {
    throw UsageError("unknown object: " + what);
  }
  if (format == "json")
    std::cout << out.dump(2) << std::endl;
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quantum Berezinian identities"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string group, mode = "auto", seed_str;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", group, "rmatrix|hecke|relations|berezinian|zeta|liouville|minors|sylvester|macmahon|hc|morphisms|all")
      ->required();
  verify->add_option("--m", cfg.m, "number of even indices");
  verify->add_option("--n", cfg.n, "number of odd indices");
  verify->add_option("--order", cfg.order, "series order");
  verify->add_option("--kcap", cfg.kcap, "largest number of auxiliary copies");
  verify->add_option("--seed", seed_str, "random seed (default $SBEREZ_SEED or 1)");
  verify->add_option("--points", cfg.points, "random points per check in point mode");
  verify->add_option("--mode", mode, "symbolic|points|auto");
  verify->add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  verify->add_flag("--verbose", verbose, "list failed and informational assertions");

  std::string what, rep_type = "eval", a, b, qs, cformat = "text";
  int cm = 1, cn = 1, corder = 2;
  auto* compute = app.add_subcommand("compute", "compute a symbolic object");
  compute->add_option("object", what, "berezinian|zeta|hc-image")->required();
  compute->add_option("--m", cm, "number of even indices");
  compute->add_option("--n", cn, "number of odd indices");
  compute->add_option("--rep", rep_type, "eval|tensor");
  compute->add_option("--a", a, "evaluation parameters, comma separated");
  compute->add_option("--b", b, "dressing parameters, comma separated");
  compute->add_option("--q", qs, "value of q (default: symbolic)");
  auto* order_opt = compute->add_option("--order", corder, "expansion order for hc-image");
  compute->add_option("--format", cformat, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      cfg.mode = parse_mode(mode);
      cfg.seed = seed_str.empty() ? default_seed() : std::stoull(seed_str);
      return run_verify(group, cfg, verbose);
    }
    return run_compute(what, cm, cn, rep_type, a, b, qs, corder, order_opt->count() > 0, cformat);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

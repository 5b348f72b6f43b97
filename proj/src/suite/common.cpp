// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/suite/common.hpp"

namespace sberez {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Symbolic:
      return "symbolic";
    case Mode::Points:
      return "points";
    case Mode::Auto:
      return "auto";
  }
  return "?";
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Rng::Rng(uint64_t seed, const std::string& key) : gen_(seed ^ fnv1a(key)) {}

namespace {
Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
}  // namespace

Rational Rng::rational() {
  // uniform_int_distribution is implementation-defined; plain modular
  // reduction keeps draws identical across standard libraries.
  for (;;) {
    long n = static_cast<long>(gen_() % 195) - 97;
    long d = static_cast<long>(gen_() % 97) + 1;
    if (n == 0) continue;
    return ratio(n, d);
  }
}

Rational Rng::q_value() {
  for (;;) {
    Rational q = rational();
    if (q != 1 && q != -1) return q;
  }
}

RepDesc random_rep(const GradedDim& dim, int factors, Rng& rng) {
  RepDesc rep{dim, {}, {}};
  auto fresh = [&](const std::vector<Rational>& used) {
    for (;;) {
      Rational x = rng.rational();
      bool clash = false;
      for (const auto& u : used) clash = clash || u == x || u == -x;
      if (!clash) return x;
    }
  };
  std::vector<Rational> used;
  for (int k = 0; k < factors; ++k) {
    rep.a.push_back(fresh(used));
    used.push_back(rep.a.back());
  }
  for (int k = 0; k < factors; ++k) {
    rep.b.push_back(fresh(used));
    used.push_back(rep.b.back());
  }
  return rep;
}

json rep_json(const RepDesc& rep) {
  json a = json::array(), b = json::array();
  for (const auto& x : rep.a) a.push_back(x.get_str());
  for (const auto& x : rep.b) b.push_back(x.get_str());
  json j{{"type", rep.type()}, {"m", rep.dim.M}, {"n", rep.dim.N}};
  if (rep.factors() == 1)
    j["a"] = a[0];
  else
    j["a"] = a;
  if (rep.dressed()) j["b"] = rep.factors() == 1 ? b[0] : b;
  return j;
}

}  // namespace sberez

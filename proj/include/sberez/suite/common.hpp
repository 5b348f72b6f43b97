// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sberez/rep/rep.hpp"
#include "sberez/report/report.hpp"
#include "sberez/scalar/ratfun.hpp"

namespace sberez {

enum class Mode { Symbolic, Points, Auto };
std::string mode_name(Mode m);

// Deterministic generator keyed by the global seed and a check name.
class Rng {
 public:
  Rng(uint64_t seed, const std::string& key);
  // Nonzero rational with |numerator|, denominator <= 97.
  Rational rational();
  // A value usable as q: not 0 or +-1.
  Rational q_value();
  uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

uint64_t fnv1a(const std::string& s);

// Random evaluation (a) and dressing (b) parameters for `factors` factors.
RepDesc random_rep(const GradedDim& dim, int factors, Rng& rng);
json rep_json(const RepDesc& rep);

// Runs body(z, tag) symbolically in z (z a variable of ZRatN) or at
// `points` random rational points, redrawing points that hit a pole or a
// singular matrix.
template <class Body>
void over_z(CheckReport& r, Mode mode, Rng& rng, int points, Body body) {
  if (mode == Mode::Symbolic) {
    body(ZRatN::var(), std::string("z"));
    return;
  }
  for (int p = 0; p < points; ++p) {
    for (int attempt = 0;; ++attempt) {
      Rational z = rng.rational();
      size_t mark = r.subs.size();
      try {
        body(z, "z=" + z.get_str());
        break;
      } catch (const SingularMatrix&) {
      } catch (const DivisionByZero&) {
      }
      r.subs.resize(mark);
      if (attempt > 20) throw std::runtime_error("no regular evaluation point found");
    }
  }
}

}  // namespace sberez

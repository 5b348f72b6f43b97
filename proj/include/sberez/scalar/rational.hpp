// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sberez {

using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline Rational rpow(const Rational& b, int k) {
  Rational r = 1;
  Rational base = k < 0 ? Rational(1 / b) : b;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= base;
  return r;
}

// Accepts "a", "-a", "a/b".
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string render(const Rational& a) { return a.get_str(); }

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& operand)
      : std::domain_error("division by zero: " + operand), operand_(operand) {}
  const std::string& operand() const { return operand_; }

 private:
  std::string operand_;
};

}  // namespace sberez

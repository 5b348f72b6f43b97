// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sberez/scalar/rational.hpp"

namespace sberez {

inline constexpr int kMaxVars = 12;
using Exps = std::array<int16_t, kMaxVars>;

// Symbol slots are fixed at startup in this order (which is also the
// monomial order used for rendering); unknown names are appended.
int var_index(const std::string& name);
const std::string& var_name(int idx);
int var_count();

// Sparse multivariate Laurent polynomial with rational coefficients.
class MPoly {
 public:
  using Terms = std::map<Exps, Rational>;

  MPoly() = default;
  MPoly(long c);               // NOLINT
  MPoly(const Rational& c);    // NOLINT

  static MPoly var(const std::string& name, int e = 1);
  static MPoly monomial(const Exps& e, const Rational& c);

  const Terms& terms() const { return t_; }
  bool zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  // Only monomial divisors are supported (Laurent inverse).
  MPoly operator/(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(t_ == o.t_); }
  bool operator<(const MPoly& o) const { return t_ < o.t_; }

  // Evaluate with values[slot]; unused slots are ignored.
  Rational eval(const std::vector<Rational>& values) const;
  // Replace a symbol by value (Rational), keeping the others.
  MPoly subs(int slot, const Rational& value) const;
  // sym -> sym * factor, where factor is a monomial.
  MPoly scale_var(int slot, const MPoly& factor) const;
  int min_exp(int slot) const;
  int max_exp(int slot) const;
  bool uses(int slot) const;

  std::string str() const;

 private:
  Terms t_;
};

inline bool is_zero(const MPoly& p) { return p.zero(); }
inline std::string render(const MPoly& p) { return p.str(); }

// Integer-coefficient rendering of num/den; a monomial denominator is
// folded in as negative exponents.
std::string render_fraction(const MPoly& num, const MPoly& den);

}  // namespace sberez

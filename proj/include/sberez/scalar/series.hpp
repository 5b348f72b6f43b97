// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <vector>

#include "sberez/scalar/ratfun.hpp"

namespace sberez {

// Ascending: powers x^0..x^K. Descending: powers x^0, x^-1, .., x^-K.
enum class SeriesDir { Ascending, Descending };

template <class K>
class TruncSeries {
 public:
  TruncSeries(int order, SeriesDir dir = SeriesDir::Ascending)
      : order_(order), dir_(dir), c_(order + 1, K(0)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }
  TruncSeries(std::vector<K> c, SeriesDir dir) : order_(static_cast<int>(c.size()) - 1), dir_(dir), c_(std::move(c)) {}

  static TruncSeries constant(const K& v, int order, SeriesDir dir = SeriesDir::Ascending) {
    TruncSeries s(order, dir);
    s.c_[0] = v;
    return s;
  }
  // Polynomial in x (or x^-1) given by coefficients; truncated.
  static TruncSeries poly(const std::vector<K>& p, int order, SeriesDir dir = SeriesDir::Ascending) {
    TruncSeries s(order, dir);
    for (size_t i = 0; i < p.size() && static_cast<int>(i) <= order; ++i) s.c_[i] = p[i];
    return s;
  }

  int order() const { return order_; }
  SeriesDir dir() const { return dir_; }
  const K& operator[](int i) const { return c_.at(i); }
  K& operator[](int i) { return c_.at(i); }
  const std::vector<K>& coeffs() const { return c_; }

  TruncSeries operator+(const TruncSeries& o) const {
    check(o);
    TruncSeries r(std::min(order_, o.order_), dir_);
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }
  TruncSeries operator*(const TruncSeries& o) const {
    check(o);
    TruncSeries r(std::min(order_, o.order_), dir_);
    for (int i = 0; i <= r.order_; ++i) {
      if (is_zero(c_[i])) continue;
      for (int j = 0; i + j <= r.order_; ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    return r;
  }
  TruncSeries scaled(const K& s) const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }
  TruncSeries reciprocal() const {
    if (is_zero(c_[0])) throw DivisionByZero("series with zero constant term");
    TruncSeries r(order_, dir_);
    K inv0 = K(1) / c_[0];
    r.c_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
      K s(0);
      for (int i = 1; i <= k; ++i) s = s + c_[i] * r.c_[k - i];
      r.c_[k] = -(s * inv0);
    }
    return r;
  }
  // x -> x * s. For a descending series the coefficient of x^-i gains s^-i.
  TruncSeries subs_scale(const K& s) const {
    TruncSeries r = *this;
    K f = dir_ == SeriesDir::Ascending ? s : K(1) / s;
    K p(1);
    for (auto& x : r.c_) {
      x = x * p;
      p = p * f;
    }
    return r;
  }
  bool is_zero_series() const {
    for (const auto& x : c_)
      if (!is_zero(x)) return false;
    return true;
  }
  bool operator==(const TruncSeries& o) const { return dir_ == o.dir_ && (*this - o).is_zero_series(); }

 private:
  void check(const TruncSeries& o) const {
    if (dir_ != o.dir_) throw std::invalid_argument("mixing ascending and descending series");
  }
  int order_;
  SeriesDir dir_;
  std::vector<K> c_;
};

template <class K>
TruncSeries<K> to_series(const UPoly<K>& num, const UPoly<K>& den, int order) {
  RatFun<K, SymZ> f(num, den);
  return TruncSeries<K>(series_at_zero(f, order), SeriesDir::Ascending);
}

class NoSolution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Normalizing series f(x) = 1 + f_1 x + ... determined by
// f(x q^{2N-2M}) = f(x) (1 - x q^-2)(1 - x q^{2N-2M+2}) / ((1 - x)(1 - x q^{2N-2M})).
TruncSeries<QRat> solve_f_series(int M, int N, int K);

// Multiplier h(x) of the functional equation, expanded to order K.
TruncSeries<QRat> f_multiplier(int M, int N, int K);

QRat q_pow(int k);
QRat q_int(int n);        // [n]_q
QRat q_factorial(int m);  // [m]_q!

}  // namespace sberez

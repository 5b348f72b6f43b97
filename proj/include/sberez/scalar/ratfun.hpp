// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sberez/scalar/rational.hpp"

namespace sberez {

// Dense univariate polynomial over a field K. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const K& c) {
    if (!is_zero(c)) c_.push_back(c);
  }
  explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static UPoly monomial(const K& c, int deg) {
    std::vector<K> v(deg + 1, K(0));
    v[deg] = c;
    return UPoly(std::move(v));
  }

  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const K& lc() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : K(0); }

  UPoly operator+(const UPoly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const {
    if (zero() || o.zero()) return UPoly();
    std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (is_zero(o.c_[j])) continue;
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
      }
    }
    return UPoly(std::move(r));
  }
  UPoly scaled(const K& s) const {
    if (is_zero(s)) return UPoly();
    UPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.zero()) throw DivisionByZero("zero polynomial");
    std::vector<K> r = c_;
    int dd = d.degree();
    int nq = degree() - dd;
    if (nq < 0) return {UPoly(), *this};
    std::vector<K> q(nq + 1, K(0));
    K inv_lc = K(1) / d.lc();
    for (int k = nq; k >= 0; --k) {
      K t = r[k + dd] * inv_lc;
      q[k] = t;
      if (is_zero(t)) continue;
      for (int j = 0; j <= dd; ++j) r[k + j] = r[k + j] - t * d.c_[j];
    }
    r.resize(dd);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  UPoly monic() const {
    if (zero()) return *this;
    return scaled(K(1) / lc());
  }

  K eval(const K& x) const {
    K r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
  }

  // p(x) -> p(s*x)
  UPoly scale_arg(const K& s) const {
    UPoly r = *this;
    K p(1);
    for (auto& x : r.c_) {
      x = x * p;
      p = p * s;
    }
    r.trim();
    return r;
  }

  // x^deg * p(1/x) for deg >= degree()
  UPoly reversed(int deg) const {
    std::vector<K> r(deg + 1, K(0));
    for (int i = 0; i <= degree(); ++i) r[deg - i] = c_[i];
    return UPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  if (a.zero()) return b.monic();
  if (b.zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UPoly<K>(K(1));
  while (!b.zero()) {
    UPoly<K> r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

struct SymQ {
  static constexpr const char* name = "q";
};
struct SymZ {
  static constexpr const char* name = "z";
};
struct SymW {
  static constexpr const char* name = "w";
};

// Univariate rational function over K in the symbol Sym. Canonical form:
// gcd(num, den) = 1 and den monic, so equality is structural.
template <class K, class Sym>
class RatFun {
 public:
  using Coeff = K;
  using Symbol = Sym;

  RatFun() : num_(), den_(K(1)) {}
  RatFun(long v) : RatFun(K(v)) {}  // NOLINT
  RatFun(const Rational& v) : num_(K(v)), den_(K(1)) {}  // NOLINT
  template <class T = K, class = std::enable_if_t<!std::is_same_v<T, Rational>>>
  RatFun(const K& v) : num_(v), den_(K(1)) {}  // NOLINT
  RatFun(UPoly<K> num, UPoly<K> den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  static RatFun var() { return RatFun(UPoly<K>::monomial(K(1), 1), UPoly<K>(K(1))); }
  // s^k for any integer k
  static RatFun var_pow(int k) {
    if (k >= 0) return RatFun(UPoly<K>::monomial(K(1), k), UPoly<K>(K(1)));
    return RatFun(UPoly<K>(K(1)), UPoly<K>::monomial(K(1), -k));
  }

  const UPoly<K>& num() const { return num_; }
  const UPoly<K>& den() const { return den_; }
  bool zero() const { return num_.zero(); }

  RatFun operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFun operator-(const RatFun& o) const { return *this + (-o); }
  RatFun operator*(const RatFun& o) const {
    if (zero() || o.zero()) return RatFun();
    return RatFun(num_ * o.num_, den_ * o.den_);
  }
  RatFun operator/(const RatFun& o) const {
    if (o.zero()) throw DivisionByZero(std::string("rational function in ") + Sym::name);
    return RatFun(num_ * o.den_, den_ * o.num_);
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  K eval(const K& x) const {
    K d = den_.eval(x);
    if (is_zero(d)) throw DivisionByZero(std::string("pole at evaluation point of ") + Sym::name);
    return num_.eval(x) / d;
  }

  // Sym -> Sym * s
  RatFun scale_var(const K& s) const { return RatFun(num_.scale_arg(s), den_.scale_arg(s)); }

  // Apply a coefficient map (a ring homomorphism K -> K) and re-canonicalize.
  template <class Fn>
  RatFun map_coeffs(Fn fn) const {
    auto apply = [&](const UPoly<K>& p) {
      std::vector<K> v;
      for (const auto& c : p.coeffs()) v.push_back(fn(c));
      return UPoly<K>(std::move(v));
    };
    return RatFun(apply(num_), apply(den_));
  }

 private:
  void canonicalize() {
    if (den_.zero()) throw DivisionByZero(std::string("zero denominator in ") + Sym::name);
    if (num_.zero()) {
      den_ = UPoly<K>(K(1));
      return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
      UPoly<K> g = upoly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
      }
    }
    K l = den_.lc();
    if (!(l == K(1))) {
      K il = K(1) / l;
      num_ = num_.scaled(il);
      den_ = den_.scaled(il);
    }
  }

  UPoly<K> num_;
  UPoly<K> den_;
};

template <class K, class S>
bool is_zero(const RatFun<K, S>& f) {
  return f.zero();
}

// q-rational functions; rational functions of z over Q(q); and of z with
// numeric q (the regime used for symbolic-z checks at a numeric q).
using QRat = RatFun<Rational, SymQ>;
using ZRat = RatFun<QRat, SymZ>;
using ZRatN = RatFun<Rational, SymZ>;
using SpectralRat = RatFun<ZRat, SymW>;

// Power series expansion at Sym = 0 through the given order.
template <class K, class S>
std::vector<K> series_at_zero(const RatFun<K, S>& f, int order) {
  const auto& d = f.den();
  if (is_zero(d.coeff(0))) throw DivisionByZero("expansion point is a pole");
  std::vector<K> inv(order + 1, K(0));
  K d0inv = K(1) / d.coeff(0);
  for (int k = 0; k <= order; ++k) {
    K s = k == 0 ? K(1) : K(0);
    for (int i = 1; i <= std::min(k, d.degree()); ++i) s = s - d.coeff(i) * inv[k - i];
    inv[k] = s * d0inv;
  }
  std::vector<K> out(order + 1, K(0));
  for (int k = 0; k <= order; ++k) {
    K s(0);
    for (int i = 0; i <= std::min(k, f.num().degree()); ++i) s = s + f.num().coeff(i) * inv[k - i];
    out[k] = s;
  }
  return out;
}

// Expansion at Sym = infinity in powers of Sym^-1; requires f regular there.
template <class K, class S>
std::vector<K> series_at_infinity(const RatFun<K, S>& f, int order) {
  int dn = f.num().zero() ? 0 : f.num().degree();
  int dd = f.den().degree();
  if (dn > dd) throw DivisionByZero("expansion point is a pole");
  RatFun<K, S> g(f.num().reversed(dd), f.den().reversed(dd));
  return series_at_zero(g, order);
}

std::string render(const QRat& f);
std::string render(const ZRat& f);
std::string render(const ZRatN& f);

}  // namespace sberez

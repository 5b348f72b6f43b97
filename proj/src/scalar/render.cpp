// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <vector>

#include "sberez/scalar/mpoly.hpp"
#include "sberez/scalar/ratfun.hpp"

namespace sberez {
namespace {

using QPoly = UPoly<Rational>;

MPoly upoly_to_mpoly(const QPoly& p, int slot) {
  MPoly r;
  Exps e{};
  e.fill(0);
  for (int i = 0; i <= p.degree(); ++i) {
    if (is_zero(p.coeff(i))) continue;
    e[slot] = static_cast<int16_t>(i);
    r += MPoly::monomial(e, p.coeff(i));
  }
  return r;
}

QPoly lcm(const QPoly& a, const QPoly& b) {
  QPoly g = upoly_gcd(a, b);
  return (a * b).divmod(g).first.monic();
}

// Leading term under the rendering order.
Rational leading_coeff(const MPoly& p) {
  const Exps* best = nullptr;
  Rational c;
  for (const auto& [e, v] : p.terms()) {
    bool better = best == nullptr;
    if (!better) {
      for (int i = 0; i < kMaxVars; ++i) {
        if (e[i] != (*best)[i]) {
          better = e[i] > (*best)[i];
          break;
        }
      }
    }
    if (better) {
      best = &e;
      c = v;
    }
  }
  return c;
}

}  // namespace

std::string render_fraction(const MPoly& num_in, const MPoly& den_in) {
  if (den_in.zero()) throw DivisionByZero("render of zero denominator");
  if (num_in.zero()) return "0";
  mpz_class l = 1;
  for (const auto* p : {&num_in, &den_in})
    for (const auto& [e, c] : p->terms()) l = lcm(l, mpz_class(c.get_den()));
  mpz_class g = 0;
  for (const auto* p : {&num_in, &den_in})
    for (const auto& [e, c] : p->terms()) g = gcd(g, mpz_class(c.get_num() * (l / c.get_den())));
  Rational scale(l, g);
  scale.canonicalize();
  MPoly num = num_in * MPoly(scale);
  MPoly den = den_in * MPoly(scale);
  if (sgn(leading_coeff(den)) < 0) {
    num = -num;
    den = -den;
  }
  if (den.is_monomial()) {
    const auto& [e, c] = *den.terms().begin();
    MPoly mono = MPoly::monomial(e, Rational(1));
    MPoly lnum = num / mono;
    if (c == 1) return lnum.str();
    bool divisible = true;
    for (const auto& [ee, cc] : lnum.terms())
      if (Rational(cc / c).get_den() != 1) divisible = false;
    if (divisible) return (lnum * MPoly(Rational(1 / c))).str();
    return "(" + lnum.str() + ")/" + c.get_str();
  }
  std::string n = num.is_monomial() ? num.str() : "(" + num.str() + ")";
  return n + "/(" + den.str() + ")";
}

std::string render(const QRat& f) {
  int q = var_index("q");
  return render_fraction(upoly_to_mpoly(f.num(), q), upoly_to_mpoly(f.den(), q));
}

std::string render(const ZRatN& f) {
  int z = var_index("z");
  return render_fraction(upoly_to_mpoly(f.num(), z), upoly_to_mpoly(f.den(), z));
}

std::string render(const ZRat& f) {
  int qs = var_index("q");
  int zs = var_index("z");
  QPoly l(Rational(1));
  for (const auto* p : {&f.num(), &f.den()})
    for (const auto& c : p->coeffs())
      if (!is_zero(c)) l = lcm(l, c.den());
  // Clear q-denominators, then strip the common q-content.
  std::vector<QPoly> nc, dc;
  QPoly g;
  for (const auto& c : f.num().coeffs()) {
    nc.push_back(c.num() * l.divmod(c.den()).first);
    g = upoly_gcd(g, nc.back());
  }
  for (const auto& c : f.den().coeffs()) {
    dc.push_back(c.num() * l.divmod(c.den()).first);
    g = upoly_gcd(g, dc.back());
  }
  auto build = [&](const std::vector<QPoly>& cs) {
    MPoly r;
    for (size_t i = 0; i < cs.size(); ++i) {
      QPoly p = g.zero() ? cs[i] : cs[i].divmod(g).first;
      Exps e{};
      e.fill(0);
      e[zs] = static_cast<int16_t>(i);
      r += upoly_to_mpoly(p, qs) * MPoly::monomial(e, Rational(1));
    }
    return r;
  };
  return render_fraction(build(nc), build(dc));
}

}  // namespace sberez

// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/rtt/abstract.hpp"

#include <algorithm>
#include <numeric>

#include "sberez/rmatrix/rmatrix.hpp"

namespace sberez {

std::string rel_kind_name(RelKind k) {
  switch (k) {
    case RelKind::PlusPlus:
      return "++";
    case RelKind::MinusMinus:
      return "--";
    case RelKind::Crossed:
      return "+-";
  }
  return "?";
}

namespace {

struct Term {
  MPoly c;
  int za, wa;  // powers of z and w in the coefficient
  int i1, j1;
  bool z1;  // first factor has argument z
  int i2, j2;
  bool z2;
};

MPoly qpow(int k) { return MPoly::var("q", k); }
MPoly sgn(int e) { return MPoly(e % 2 ? -1 : 1); }

std::vector<Term> component_terms(const GradedDim& dim, int a, int b, int c, int d, bool crossed) {
  auto p = [&](int i) { return dim.parity(i); };
  auto qi = [&](int i) { return qpow(1 - 2 * p(i)); };
  MPoly qq = qpow(1) - qpow(-1);
  MPoly zl = crossed ? MPoly::var("qc", 1) : MPoly(1);
  MPoly zr = crossed ? MPoly::var("qc", -1) : MPoly(1);
  std::vector<Term> t;
  MPoly s1 = sgn(p(a) * (p(c) + p(d))), s2 = sgn(p(c) * p(d)), s3 = sgn(p(b) * (p(c) + p(d)));
  // left side: products l(z) l(w)
  if (a == c) {
    t.push_back({qi(a) * s1 * zl, 1, 0, a, b, true, c, d, false});
    t.push_back({-(s1 / qi(a)), 0, 1, a, b, true, c, d, false});
  } else {
    t.push_back({s1 * zl, 1, 0, a, b, true, c, d, false});
    t.push_back({-s1, 0, 1, a, b, true, c, d, false});
  }
  if (a > c) t.push_back({qq * s2, 0, 1, c, b, true, a, d, false});
  if (a < c) t.push_back({qq * s2 * zl, 1, 0, c, b, true, a, d, false});
  // right side, subtracted: products l(w) l(z)
  if (b == d) {
    t.push_back({-(qi(b) * s3 * zr), 1, 0, c, d, false, a, b, true});
    t.push_back({s3 / qi(b), 0, 1, c, d, false, a, b, true});
  } else {
    t.push_back({-(s3 * zr), 1, 0, c, d, false, a, b, true});
    t.push_back({s3, 0, 1, c, d, false, a, b, true});
  }
  if (d > b) t.push_back({-(qq * s2), 0, 1, c, b, false, a, d, true});
  if (d < b) t.push_back({-(qq * s2 * zr), 1, 0, c, b, false, a, d, true});
  return t;
}

}  // namespace

std::vector<Relation> expand_rll(const GradedDim& dim, RelKind kind, int K) {
  int sz = kind == RelKind::MinusMinus ? -1 : +1;
  int sw = kind == RelKind::PlusPlus ? +1 : -1;
  bool crossed = kind == RelKind::Crossed;
  int n = dim.n();
  std::vector<Relation> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          auto terms = component_terms(dim, a, b, c, d, crossed);
          for (int mz = 0; mz <= K; ++mz)
            for (int mw = 0; mw <= K; ++mw) {
              // target exponents of z and w
              int ez = sz > 0 ? 1 - mz : mz;
              int ew = sw > 0 ? 1 - mw : mw;
              NCPoly rel;
              for (const auto& t : terms) {
                // a generator of family s with argument x carries x^{-s r}
                int rz = sz > 0 ? t.za - ez : ez - t.za;
                int rw = sw > 0 ? t.wa - ew : ew - t.wa;
                if (rz < 0 || rz > K || rw < 0 || rw > K) continue;
                GenIndex g1{t.z1 ? sz : sw, t.i1, t.j1, t.z1 ? rz : rw, false};
                GenIndex g2{t.z2 ? sz : sw, t.i2, t.j2, t.z2 ? rz : rw, false};
                rel += (NCPoly::gen(g1) * NCPoly::gen(g2)).scaled(t.c);
              }
              if (!rel.zero()) out.push_back({a, b, c, d, mz, mw, rel});
            }
        }
  return out;
}

NCSeries series_mul(const NCSeries& a, const NCSeries& b) {
  size_t K = std::min(a.size(), b.size());
  NCSeries r(K);
  for (size_t i = 0; i < K; ++i) {
    if (a[i].zero()) continue;
    for (size_t j = 0; i + j < K; ++j)
      if (!b[j].zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

NCSeries series_add(const NCSeries& a, const NCSeries& b) {
  NCSeries r(std::min(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

NCSeries series_scaled(const NCSeries& a, const MPoly& c) {
  NCSeries r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].scaled(c);
  return r;
}

namespace {
NCPoly inverse_of_constant(const NCPoly& c0) {
  const auto& t = c0.terms();
  if (t.size() != 1) throw NotInvertible("constant term is not a single generator");
  const auto& [w, c] = *t.begin();
  if (w.size() != 1 || !w[0].diagonal() || w[0].r != 0 || c != MPoly(1))
    throw NotInvertible("constant term is not an invertible diagonal generator");
  GenIndex g = w[0];
  g.inv = !g.inv;
  return NCPoly::gen(g);
}
}  // namespace

NCSeries series_inverse_diag(const NCSeries& a) {
  NCPoly inv0 = inverse_of_constant(a.at(0));
  NCSeries x(a.size());
  x[0] = inv0;
  for (size_t r = 1; r < a.size(); ++r) {
    NCPoly s;
    for (size_t t = 1; t <= r; ++t) s += a[t] * x[r - t];
    x[r] = -(inv0 * s);
  }
  return x;
}

AbstractL::AbstractL(GradedDim d, int s, int k) : dim(d), sign(s), K(k) {
  e.assign(static_cast<size_t>(d.n()) * d.n(), NCSeries(k + 1));
}

AbstractL generic_L(const GradedDim& dim, int sign, int K) {
  AbstractL L(dim, sign, K);
  for (int i = 0; i < dim.n(); ++i)
    for (int j = 0; j < dim.n(); ++j)
      for (int r = 0; r <= K; ++r) {
        bool vanishes = r == 0 && (sign > 0 ? i > j : i < j);
        if (!vanishes) L.at(i, j)[r] = NCPoly::gen({sign, i, j, r, false});
      }
  return L;
}

AbstractL graded_product(const AbstractL& x, const AbstractL& y) {
  AbstractL r(x.dim, x.sign, std::min(x.K, y.K));
  int n = x.n();
  auto p = [&](int i) { return x.dim.parity(i); };
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      NCSeries s(r.K + 1);
      for (int j = 0; j < n; ++j) {
        NCSeries t = series_mul(x.at(i, j), y.at(j, l));
        if (((p(i) + p(j)) * (p(j) + p(l))) % 2) t = series_scaled(t, MPoly(-1));
        s = series_add(s, t);
      }
      r.at(i, l) = s;
    }
  return r;
}

AbstractL shift_arg(const AbstractL& x, int k) {
  AbstractL r = x;
  for (auto& s : r.e)
    for (int t = 0; t <= r.K; ++t) s[t] = s[t].scaled(MPoly::var("q", -x.sign * 2 * k * t));
  return r;
}

bool is_identity(const AbstractL& x) {
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j)
      for (int r = 0; r <= x.K; ++r) {
        const NCPoly& v = x.at(i, j)[r];
        if (i == j && r == 0 ? v != NCPoly::one() : !v.zero()) return false;
      }
  return true;
}

AbstractL invert_L_series(const AbstractL& L) {
  int n = L.n();
  auto p = [&](int i) { return L.dim.parity(i); };
  bool upper = true, lower = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j && !L.at(i, j)[0].zero()) upper = false;
      if (i < j && !L.at(i, j)[0].zero()) lower = false;
    }
  if (!upper && !lower) throw NotInvertible("order-0 part is not triangular");
  // X0 with L0 X0 = 1, solved row by row from the diagonal outwards.
  AbstractL X(L.dim, L.sign, L.K);
  std::vector<NCPoly> dinv(n);
  for (int i = 0; i < n; ++i) dinv[i] = inverse_of_constant(L.at(i, i)[0]);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (upper) std::reverse(order.begin(), order.end());
  for (int i : order)
    for (int j = 0; j < n; ++j) {
      NCPoly s = i == j ? NCPoly::one() : NCPoly();
      for (int k = 0; k < n; ++k) {
        if (k == i || (upper ? k < i : k > i)) continue;
        NCPoly t = L.at(i, k)[0] * X.at(k, j)[0];
        if (((p(i) + p(k)) * (p(k) + p(j))) % 2) t = -t;
        s = s - t;
      }
      X.at(i, j)[0] = dinv[i] * s;
    }
  // X_r = -X_0 sum_{t=1}^{r} L_t X_{r-t}
  for (int r = 1; r <= L.K; ++r) {
    AbstractL acc(L.dim, L.sign, 0);
    for (int t = 1; t <= r; ++t) {
      AbstractL Lt(L.dim, L.sign, 0), Xr(L.dim, L.sign, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Lt.at(i, j)[0] = L.at(i, j)[t];
          Xr.at(i, j)[0] = X.at(i, j)[r - t];
        }
      AbstractL prod = graded_product(Lt, Xr);
      for (size_t k = 0; k < acc.e.size(); ++k) acc.e[k][0] += prod.e[k][0];
    }
    AbstractL X0c(L.dim, L.sign, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) X0c.at(i, j)[0] = X.at(i, j)[0];
    AbstractL y = graded_product(X0c, acc);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) X.at(i, j)[r] = -y.at(i, j)[0];
  }
  if (!is_identity(graded_product(L, X))) throw NotInvertible("series inverse failed verification");
  return X;
}

NCSeries berezinian_abstract(const GradedDim& dim, int sign, int K) {
  AbstractL L = generic_L(dim, sign, K);
  auto weight = [&](int l) { return MPoly(l % 2 ? -1 : 1) * MPoly::var("q", -l); };
  NCSeries first(K + 1), second(K + 1);
  first[0] = second[0] = NCPoly::one();
  if (dim.M > 0) {
    std::vector<AbstractL> E;
    for (int k = 0; k < dim.M; ++k) E.push_back(shift_arg(L, k));
    NCSeries sum(K + 1);
    std::vector<int> s(dim.M);
    std::iota(s.begin(), s.end(), 0);
    do {
      NCSeries t = E[0].at(s[0], 0);
      for (int k = 1; k < dim.M; ++k) t = series_mul(t, E[k].at(s[k], k));
      sum = series_add(sum, series_scaled(t, weight(perm_length(s))));
    } while (std::next_permutation(s.begin(), s.end()));
    first = sum;
  }
  if (dim.N > 0) {
    std::vector<AbstractL> Iv;
    for (int k = 1; k <= dim.N; ++k) Iv.push_back(invert_L_series(shift_arg(L, dim.M - k)));
    NCSeries sum(K + 1);
    std::vector<int> s(dim.N);
    std::iota(s.begin(), s.end(), 0);
    do {
      NCSeries t = Iv[0].at(dim.M, dim.M + s[0]);
      for (int k = 1; k < dim.N; ++k) t = series_mul(t, Iv[k].at(dim.M + k, dim.M + s[k]));
      sum = series_add(sum, series_scaled(t, weight(perm_length(s))));
    } while (std::next_permutation(s.begin(), s.end()));
    second = sum;
  }
  return series_mul(first, second);
}

NCSeries hc_formula(const GradedDim& dim, int sign, int K) {
  AbstractL L = generic_L(dim, sign, K);
  NCSeries r(K + 1);
  r[0] = NCPoly::one();
  for (int i = 0; i < dim.M; ++i) r = series_mul(r, shift_arg(L, i).at(i, i));
  for (int k = 1; k <= dim.N; ++k) {
    int i = dim.M + k - 1;
    r = series_mul(r, series_inverse_diag(shift_arg(L, dim.M - k).at(i, i)));
  }
  return r;
}

Mat<Rational> instantiate(const NCPoly& p, const std::function<Mat<Rational>(const GenIndex&)>& gen,
                          const Rational& q, int wdim) {
  std::vector<Rational> vals(var_count(), Rational(0));
  vals[var_index("q")] = q;
  vals[var_index("qc")] = 1;
  Mat<Rational> out(wdim, wdim);
  for (const auto& [w, c] : p.terms()) {
    Mat<Rational> m = Mat<Rational>::identity(wdim);
    for (const auto& g : w) m = m * gen(g);
    out = out + m.scaled(c.eval(vals));
  }
  return out;
}

}  // namespace sberez

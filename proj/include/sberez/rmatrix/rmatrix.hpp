// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sberez/tensor/graded.hpp"

namespace sberez {

// How q enters the coefficients of R. Coefficients: q -> q^-1 in the
// coefficients only. GradingSwap: q -> q^-1 together with the parity data
// entering q_i (q_i -> q^{-(1-2(1-p(i)))}).
enum class QVariant { Standard, Coefficients, GradingSwap };

// R(z,w) = sum_i (z q_i - w q_i^-1) E_ii x E_ii + (z - w) sum_{i!=j} E_ii x E_jj
//        + z sum_{i<j} (q_j - q_j^-1) E_ij x E_ji + w sum_{i>j} (q_j - q_j^-1) E_ij x E_ji
template <class F>
std::vector<Coeff<F>> R_coeffs(const GradedDim& dim, const F& z, const F& w, const F& q,
                               QVariant v = QVariant::Standard) {
  F qq = v == QVariant::Standard ? q : F(F(1) / q);
  auto qi = [&](int i) {
    int p = dim.parity(i);
    if (v == QVariant::GradingSwap) p = 1 - p;
    return p ? F(F(1) / qq) : qq;
  };
  std::vector<Coeff<F>> cs;
  int n = dim.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        F c = z * qi(i) - w / qi(i);
        if (!is_zero(c)) cs.push_back({{i, i}, {i, i}, c});
      } else {
        F c = z - w;
        if (!is_zero(c)) cs.push_back({{i, j}, {i, j}, c});
        F d = qi(j) - F(1) / qi(j);
        F e = i < j ? F(z * d) : F(w * d);
        if (!is_zero(e)) cs.push_back({{i, j}, {j, i}, e});
      }
    }
  return cs;
}

template <class F>
GradedOp<F> build_R(const GradedDim& dim, const F& z, const F& w, const F& q, QVariant v = QVariant::Standard) {
  return from_coeffs(dim, 2, R_coeffs(dim, z, w, q, v));
}

// Rbar(x) = R(x, 1) / (x q - q^-1)
template <class F>
GradedOp<F> build_Rbar(const GradedDim& dim, const F& x, const F& q, QVariant v = QVariant::Standard) {
  F qq = v == QVariant::Standard ? q : F(F(1) / q);
  F s = x * qq - F(1) / qq;
  return build_R(dim, x, F(1), q, v).scaled(checked_inv(s));
}

// R = R(1,0) and R' read off from R(z,w) = z R - w R'.
template <class F>
GradedOp<F> build_R_const(const GradedDim& dim, const F& q) {
  return build_R(dim, F(1), F(0), q);
}
template <class F>
GradedOp<F> build_R_prime(const GradedDim& dim, const F& q) {
  return build_R(dim, F(0), F(1), q).scaled(F(-1));
}

// R_21 = P R_12 P
template <class F>
GradedOp<F> flip21(const GradedOp<F>& r12) {
  GradedOp<F> P = perm_P<F>(r12.dim);
  return P * r12 * P;
}

// Hecke generator T_k = P_{k,k+1} R_{k,k+1}(1,0) on m legs (k 0-based).
template <class F>
GradedOp<F> hecke_T(const GradedDim& dim, const F& q, int k, int m) {
  GradedOp<F> P = embed(perm_P<F>(dim), {k, k + 1}, m);
  GradedOp<F> R = embed(build_R_const(dim, q), {k, k + 1}, m);
  return P * R;
}

// Rhat(q^{2j}) = P R(q^j, q^-j) on legs (k, k+1) of m.
template <class F>
GradedOp<F> rhat_qpow(const GradedDim& dim, const F& q, int j, int k, int m) {
  GradedOp<F> P = embed(perm_P<F>(dim), {k, k + 1}, m);
  GradedOp<F> R = embed(build_R(dim, power(q, j), power(q, -j), q), {k, k + 1}, m);
  return P * R;
}

inline int perm_length(const std::vector<int>& s) {
  int l = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++l;
  return l;
}

// Left-greedy reduced word: repeatedly swap the leftmost descent. Returns
// generator indices w with sigma = s_{w[last]} ... s_{w[0]}.
inline std::vector<int> reduced_word(std::vector<int> s) {
  std::vector<int> seq;
  for (;;) {
    bool found = false;
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] > s[i + 1]) {
        std::swap(s[i], s[i + 1]);
        seq.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    if (!found) break;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

// T_sigma on legs off..off+m-1 of a `total`-leg space.
template <class F>
GradedOp<F> hecke_T_sigma(const GradedDim& dim, const F& q, const std::vector<int>& word, int off, int total) {
  GradedOp<F> A = GradedOp<F>::identity(dim, total);
  for (int i : word) A = A * hecke_T(dim, q, off + i, total);
  return A;
}

// An operator divided by a scalar, so symmetrizers can be handled over a
// polynomial ring without division.
template <class F>
struct ScaledOp {
  GradedOp<F> op;
  F scale;
  bool same_as(const ScaledOp& o) const { return op.scaled(o.scale) == o.op.scaled(scale); }
  bool idempotent() const { return op * op == op.scaled(scale); }
  ScaledOp operator*(const ScaledOp& o) const { return {op * o.op, scale * o.scale}; }
  GradedOp<F> value() const { return op.scaled(F(F(1) / scale)); }
};

template <class F>
F q_integer(const F& q, int n) {
  // [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}
  F s(0);
  for (int k = n - 1; k >= 1 - n; k -= 2) s = s + power(q, k);
  return s;
}

// Group-sum symmetrizer (anti = false) or antisymmetrizer on legs
// off..off+m-1. base is q or q^-1.
template <class F>
ScaledOp<F> symmetrizer_group(const GradedDim& dim, const F& q, int m, bool anti, int off, int total) {
  std::vector<int> s(m);
  std::iota(s.begin(), s.end(), 0);
  GradedOp<F> sum(dim, total);
  do {
    int l = perm_length(s);
    F c = anti ? F(power(F(-1), l) * power(q, -l)) : power(q, l);
    sum = sum + hecke_T_sigma(dim, q, reduced_word(s), off, total).scaled(c);
  } while (std::next_permutation(s.begin(), s.end()));
  F fact(1);
  for (int i = 1; i <= m; ++i) fact = fact * q_integer(q, i);
  int e = m * (m - 1) / 2;
  return {sum.scaled(power(q, anti ? e : -e)), fact};
}

// Recursion S_{k+1} = S_k Rhat_{k,k+1}(q^{2k}) S_k / (q^{k+1} - q^{-k-1}),
// A with q^{-2k}.
template <class F>
ScaledOp<F> symmetrizer_rec(const GradedDim& dim, const F& q, int m, bool anti, int off, int total) {
  ScaledOp<F> S{GradedOp<F>::identity(dim, total), F(1)};
  for (int k = 1; k < m; ++k) {
    GradedOp<F> Rh = rhat_qpow(dim, q, anti ? -k : k, off + k - 1, total);
    S = ScaledOp<F>{S.op * Rh * S.op, S.scale * S.scale * (power(q, k + 1) - power(q, -k - 1))};
  }
  return S;
}

}  // namespace sberez

// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numeric>
#include <vector>

#include "sberez/rep/rep.hpp"

namespace sberez {

template <class F>
Mat<F> w_identity(const OpMatrix<F>& X) {
  return Mat<F>::identity(X.dW());
}

// Sum over S_{m1} x S_{n1}: entries A(z q^{2k})_{sigma(k),k} for the first
// m1 rows, then entries of A(z q^{2 m1 - 2k})^{-1} for the last n1 rows.
// A(x) must have size m1 + n1.
template <class F>
Mat<F> ber_gen(const LFun<F>& A, int m1, int n1, const F& z, const F& q) {
  OpMatrix<F> A0 = A(z);
  int d = A0.dW();
  F mq = F(-1) * q;
  Mat<F> first = Mat<F>::identity(d);
  if (m1 > 0) {
    std::vector<OpMatrix<F>> E;
    for (int k = 0; k < m1; ++k) E.push_back(k == 0 ? A0 : A(z * power(q, 2 * k)));
    first = Mat<F>(d, d);
    std::vector<int> s(m1);
    std::iota(s.begin(), s.end(), 0);
    do {
      Mat<F> t = E[0].at(s[0], 0);
      for (int k = 1; k < m1; ++k) t = t * E[k].at(s[k], k);
      first = first + t.scaled(power(mq, -perm_length(s)));
    } while (std::next_permutation(s.begin(), s.end()));
  }
  Mat<F> second = Mat<F>::identity(d);
  if (n1 > 0) {
    std::vector<OpMatrix<F>> Iv;
    for (int k = 1; k <= n1; ++k) Iv.push_back(A(z * power(q, 2 * m1 - 2 * k)).inverse());
    second = Mat<F>(d, d);
    std::vector<int> s(n1);
    std::iota(s.begin(), s.end(), 0);
    do {
      Mat<F> t = Iv[0].at(m1, m1 + s[0]);
      for (int k = 1; k < n1; ++k) t = t * Iv[k].at(m1 + k, m1 + s[k]);
      second = second + t.scaled(power(mq, -perm_length(s)));
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return first * second;
}

template <class F>
Mat<F> ber_sum(const GradedDim& dim, const LFun<F>& L, const F& z, const F& q) {
  return ber_gen(L, dim.M, dim.N, z, q);
}

template <class F>
LFun<F> sub_lfun(const LFun<F>& L, std::vector<int> idx) {
  return [L, idx](const F& x) { return L(x).sub(idx); };
}

template <class F>
LFun<F> shifted(const LFun<F>& L, F s) {
  return [L, s](const F& x) { return L(x * s); };
}

// |X|_{ij} = ((X^{-1})_{ji})^{-1}
template <class F>
Mat<F> quasidet(const OpMatrix<F>& X, int i, int j) {
  return X.inverse().at(j, i).inverse();
}

// The factors |L(z)^{(1)}|_{11} ... |L(zq^{2M-2N})^{(M+N)}|^{-1}.
template <class F>
std::vector<Mat<F>> decomposition_factors(const GradedDim& dim, const LFun<F>& L, const F& z, const F& q) {
  std::vector<Mat<F>> out;
  auto lead = [](int k) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  for (int k = 1; k <= dim.M; ++k) out.push_back(quasidet(L(z * power(q, 2 * k - 2)).sub(lead(k)), k - 1, k - 1));
  for (int k = 1; k <= dim.N; ++k) {
    OpMatrix<F> X = L(z * power(q, 2 * dim.M - 2 * k)).sub(lead(dim.M + k));
    out.push_back(X.inverse().at(dim.M + k - 1, dim.M + k - 1));
  }
  return out;
}

// Graded Schur complement of the leading k x k block, i.e. the inverse of
// the trailing block of X^{-1}.
template <class F>
OpMatrix<F> schur_complement(const OpMatrix<F>& X, int k) {
  std::vector<int> tail(X.size() - k);
  std::iota(tail.begin(), tail.end(), k);
  return X.inverse().sub(tail).inverse();
}

// Entrywise (A^st)_{ij} = (-1)^{p(i)(p(i)+p(j))} A_ji
template <class F>
OpMatrix<F> st_aux(const OpMatrix<F>& X) {
  OpMatrix<F> r(X.par, X.wpar);
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j) {
      int pi = X.par[i], pj = X.par[j];
      r.at(i, j) = (pi * (pi + pj)) % 2 ? Mat<F>(-X.at(j, i)) : X.at(j, i);
    }
  return r;
}

template <class F>
OpMatrix<F> diag_op(const OpMatrix<F>& like, const std::vector<F>& d) {
  OpMatrix<F> r(like.par, like.wpar);
  for (int i = 0; i < r.size(); ++i) r.at(i, i) = Mat<F>::identity(r.dW()).scaled(d[i]);
  return r;
}

template <class F>
std::vector<F> D_diag(const GradedDim& dim, const F& q, bool inverse) {
  std::vector<F> d;
  for (int e : D_exponents(dim)) d.push_back(power(q, inverse ? -e : e));
  return d;
}

template <class F>
Mat<F> str_aux(const OpMatrix<F>& X) {
  Mat<F> s(X.dW(), X.dW());
  for (int i = 0; i < X.size(); ++i) s = X.par[i] ? Mat<F>(s - X.at(i, i)) : Mat<F>(s + X.at(i, i));
  return s;
}

template <class F>
Mat<F> tr_aux(const OpMatrix<F>& X) {
  Mat<F> s(X.dW(), X.dW());
  for (int i = 0; i < X.size(); ++i) s = s + X.at(i, i);
  return s;
}

// L(zs)^st D (L(z)^{-1})^st with s = q^{2N-2M}.
template <class F>
OpMatrix<F> lltr_lhs(const GradedDim& dim, const LFun<F>& L, const F& z, const F& q, const std::vector<F>& d) {
  F s = power(q, 2 * dim.N - 2 * dim.M);
  OpMatrix<F> A = L(z * s), B = L(z).inverse();
  return st_aux(A) * diag_op(A, d) * st_aux(B);
}

// (L(z)^{-1})^st D^{-1} L(zs)^st
template <class F>
OpMatrix<F> secllrt_lhs(const GradedDim& dim, const LFun<F>& L, const F& z, const F& q, const std::vector<F>& d) {
  F s = power(q, 2 * dim.N - 2 * dim.M);
  OpMatrix<F> A = L(z * s), B = L(z).inverse();
  std::vector<F> dinv;
  for (const auto& x : d) dinv.push_back(F(1) / x);
  return st_aux(B) * diag_op(A, dinv) * st_aux(A);
}

// Scalar c with X = c * diag(d) (as W-operator), extracted from entry (0,0).
template <class F>
Mat<F> extract_scalar(const OpMatrix<F>& X, const std::vector<F>& d) {
  return X.at(0, 0).scaled(F(1) / d[0]);
}

template <class F>
bool is_scalar_times(const OpMatrix<F>& X, const Mat<F>& c, const std::vector<F>& d) {
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j) {
      if (i == j) {
        if (X.at(i, i) != c.scaled(d[i])) return false;
      } else if (!X.at(i, j).is_zero_matrix()) {
        return false;
      }
    }
  return true;
}

// zeta(z) read from L(zs)^st D~ (L(z)^{-1})^st = zeta(z) D~ with D~ = D^{-1}
// (the form under which the left side is scalar).
template <class F>
Mat<F> zeta_value(const GradedDim& dim, const LFun<F>& L, const F& z, const F& q) {
  auto d = D_diag(dim, q, true);
  return extract_scalar(lltr_lhs(dim, L, z, q, d), d);
}

// Entrywise formula for column j with weights w_i^{(j)}:
// sum_i w_i l_ij(zs) l'_ji(z)  (first) or  sum_i w'_i l'_ij(z) l_ji(zs)  (second).
template <class F>
Mat<F> zeta_entry_sum(const OpMatrix<F>& Ls, const OpMatrix<F>& Li, int j, const std::vector<F>& w, bool second) {
  Mat<F> s(Ls.dW(), Ls.dW());
  for (int i = 0; i < Ls.size(); ++i) {
    Mat<F> t = second ? Mat<F>(Li.at(i, j) * Ls.at(j, i)) : Mat<F>(Ls.at(i, j) * Li.at(j, i));
    s = s + t.scaled(w[i]);
  }
  return s;
}

// Fusion form of the Berezinian, computed on the full space W x aux^{M+N}.
template <class F>
Mat<F> ber_fusion_full(const RepDesc& rep, const F& z, const F& q) {
  const GradedDim& dim = rep.dim;
  int r = rep.factors(), m = dim.n(), total = r + m;
  GradedOp<F> X = GradedOp<F>::identity(dim, total);
  for (int k = 0; k < m; ++k) {
    std::vector<Coeff<F>> cs;
    for (int i = 0; i < dim.n(); ++i)
      if (dim.parity(i) == (k < dim.M ? 0 : 1)) cs.push_back({{i}, {i}, F(1)});
    X = X * place_on_aux(from_coeffs(dim, 1, cs), r, {k}, total);
  }
  if (dim.M >= 2) X = X * symmetrizer_rec(dim, q, dim.M, true, r, total).value();
  for (int k = 0; k < dim.M; ++k) X = X * place_aux(rep_op(rep, F(z * power(q, 2 * k)), q), r, k, total);
  for (int k = 1; k <= dim.N; ++k)
    X = X * place_aux(rep_op(rep, F(z * power(q, 2 * dim.M - 2 * k)), q).inverse(), r, dim.M + k - 1, total);
  if (dim.N >= 2) X = X * symmetrizer_rec(dim, F(F(1) / q), dim.N, false, r + dim.M, total).value();
  std::vector<int> aux(m);
  std::iota(aux.begin(), aux.end(), r);
  return supertrace(X, aux).mat;
}

// Same, with the even legs and the odd legs traced separately.
template <class F>
Mat<F> ber_fusion_factorized(const RepDesc& rep, const F& z, const F& q) {
  const GradedDim& dim = rep.dim;
  int r = rep.factors();
  auto projector = [&](int par) {
    std::vector<Coeff<F>> cs;
    for (int i = 0; i < dim.n(); ++i)
      if (dim.parity(i) == par) cs.push_back({{i}, {i}, F(1)});
    return from_coeffs(dim, 1, cs);
  };
  Mat<F> even = Mat<F>::identity(rep.w_dim()), odd = even;
  if (dim.M > 0) {
    int total = r + dim.M;
    GradedOp<F> X = GradedOp<F>::identity(dim, total);
    for (int k = 0; k < dim.M; ++k) X = X * place_on_aux(projector(0), r, {k}, total);
    if (dim.M >= 2) X = X * symmetrizer_rec(dim, q, dim.M, true, r, total).value();
    for (int k = 0; k < dim.M; ++k) X = X * place_aux(rep_op(rep, F(z * power(q, 2 * k)), q), r, k, total);
    std::vector<int> aux(dim.M);
    std::iota(aux.begin(), aux.end(), r);
    even = supertrace(X, aux).mat;
  }
  if (dim.N > 0) {
    int total = r + dim.N;
    GradedOp<F> X = GradedOp<F>::identity(dim, total);
    for (int k = 0; k < dim.N; ++k) X = X * place_on_aux(projector(1), r, {k}, total);
    for (int k = 1; k <= dim.N; ++k)
      X = X * place_aux(rep_op(rep, F(z * power(q, 2 * dim.M - 2 * k)), q).inverse(), r, k - 1, total);
    if (dim.N >= 2) X = X * symmetrizer_rec(dim, F(F(1) / q), dim.N, false, r, total).value();
    std::vector<int> aux(dim.N);
    std::iota(aux.begin(), aux.end(), r);
    odd = supertrace(X, aux).mat;
  }
  return even * odd;
}

// L_1(z) L_2(zq^2) ... L_k(zq^{2k-2}) on W x aux^k.
template <class F>
GradedOp<F> fused_product(const RepDesc& rep, const F& z, const F& q, int k, bool descending = false) {
  int r = rep.factors(), total = r + k;
  GradedOp<F> X = GradedOp<F>::identity(rep.dim, total);
  for (int i = 0; i < k; ++i) {
    int e = descending ? 2 * (k - 1 - i) : 2 * i;
    X = X * place_aux(rep_op(rep, F(z * power(q, e)), q), r, i, total);
  }
  return X;
}

}  // namespace sberez

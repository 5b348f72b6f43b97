// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sberez/tensor/mat.hpp"

namespace sberez {

// C^{M|N}. Indices are 0-based: parity(i) = 0 for i < M, 1 otherwise.
struct GradedDim {
  int M = 0;
  int N = 0;
  GradedDim() = default;
  GradedDim(int m, int n) : M(m), N(n) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need M, N >= 0 and M + N >= 1");
  }
  int n() const { return M + N; }
  int parity(int i) const { return i < M ? 0 : 1; }
  bool operator==(const GradedDim& o) const { return M == o.M && N == o.N; }
  std::string str() const { return "(" + std::to_string(M) + "|" + std::to_string(N) + ")"; }
};

enum class Composition { Koszul, Plain };

// Tensor-composition convention. Koszul is the default; it is the one under
// which the Yang-Baxter equation holds (see check_qybe).
Composition composition();
void set_composition(Composition c);

// Overrides the convention on the current thread for the lifetime of the
// object (used by the convention arbiter).
class CompositionScope {
 public:
  explicit CompositionScope(Composition c);
  ~CompositionScope();
  CompositionScope(const CompositionScope&) = delete;
  CompositionScope& operator=(const CompositionScope&) = delete;

 private:
  int saved_;
};

// Multi-index digits of a flat index, leg 0 most significant.
std::vector<int> digits(long idx, int n, int legs);
long flat_index(const std::vector<int>& d, int n);
int ipow(int b, int e);

// Sign relating the graded coefficient of E_{I_1 J_1} x ... x E_{I_m J_m} to
// its entry in the plain action matrix.
int twist_sign(const GradedDim& dim, const std::vector<int>& I, const std::vector<int>& J);

// Operator on (C^{M|N})^{legs}, stored as its action matrix on the graded
// tensor space.
template <class F>
struct GradedOp {
  GradedDim dim;
  int legs = 0;
  Mat<F> mat;

  GradedOp() = default;
  GradedOp(GradedDim d, int l) : dim(d), legs(l), mat(ipow(d.n(), l), ipow(d.n(), l)) {}
  GradedOp(GradedDim d, int l, Mat<F> m) : dim(d), legs(l), mat(std::move(m)) {
    if (mat.rows() != ipow(d.n(), l) || mat.cols() != ipow(d.n(), l))
      throw std::invalid_argument("operator size does not match legs");
  }
  static GradedOp identity(GradedDim d, int l) { return GradedOp(d, l, Mat<F>::identity(ipow(d.n(), l))); }

  int size() const { return mat.rows(); }
  GradedOp operator*(const GradedOp& o) const {
    compat(o);
    return GradedOp(dim, legs, mat * o.mat);
  }
  GradedOp operator+(const GradedOp& o) const {
    compat(o);
    return GradedOp(dim, legs, mat + o.mat);
  }
  GradedOp operator-(const GradedOp& o) const {
    compat(o);
    return GradedOp(dim, legs, mat - o.mat);
  }
  GradedOp scaled(const F& s) const { return GradedOp(dim, legs, mat.scaled(s)); }
  GradedOp inverse() const { return GradedOp(dim, legs, mat.inverse()); }
  bool operator==(const GradedOp& o) const { return dim == o.dim && legs == o.legs && mat == o.mat; }
  bool is_zero_op() const { return mat.is_zero_matrix(); }

 private:
  void compat(const GradedOp& o) const {
    if (!(dim == o.dim) || legs != o.legs) throw std::invalid_argument("operators on different spaces");
  }
};

template <class F>
struct Coeff {
  std::vector<int> I, J;
  F c;
};

template <class F>
std::vector<Coeff<F>> graded_coeffs(const GradedOp<F>& op) {
  std::vector<Coeff<F>> out;
  int n = op.dim.n();
  for (int r = 0; r < op.size(); ++r) {
    for (int c = 0; c < op.size(); ++c) {
      const F& v = op.mat(r, c);
      if (is_zero(v)) continue;
      auto I = digits(r, n, op.legs);
      auto J = digits(c, n, op.legs);
      out.push_back({I, J, twist_sign(op.dim, I, J) < 0 ? F(-v) : v});
    }
  }
  return out;
}

template <class F>
GradedOp<F> from_coeffs(const GradedDim& dim, int legs, const std::vector<Coeff<F>>& cs) {
  GradedOp<F> op(dim, legs);
  int n = dim.n();
  for (const auto& k : cs) {
    long r = flat_index(k.I, n), c = flat_index(k.J, n);
    if (twist_sign(dim, k.I, k.J) < 0)
      op.mat(r, c) -= k.c;
    else
      op.mat(r, c) += k.c;
  }
  return op;
}

// Place an operator on the given leg positions of a `total`-leg product,
// identity elsewhere. Reordering graded factors contributes a Koszul sign.
template <class F>
GradedOp<F> embed(const GradedOp<F>& op, const std::vector<int>& positions, int total) {
  if (static_cast<int>(positions.size()) != op.legs) throw std::invalid_argument("embed: position count");
  for (int p : positions)
    if (p < 0 || p >= total) throw std::out_of_range("embed: position overflow");
  for (size_t a = 0; a < positions.size(); ++a)
    for (size_t b = a + 1; b < positions.size(); ++b)
      if (positions[a] == positions[b]) throw std::invalid_argument("embed: repeated position");
  const GradedDim& dim = op.dim;
  int n = dim.n();
  std::vector<int> others;
  for (int x = 0; x < total; ++x)
    if (std::find(positions.begin(), positions.end(), x) == positions.end()) others.push_back(x);
  long nrest = ipow(n, static_cast<int>(others.size()));
  GradedOp<F> out(dim, total);
  bool koszul = composition() == Composition::Koszul;
  for (const auto& k : graded_coeffs(op)) {
    int sgn = 1;
    if (koszul) {
      for (int a = 0; a < op.legs; ++a)
        for (int b = a + 1; b < op.legs; ++b)
          if (positions[a] > positions[b] && (dim.parity(k.I[a]) + dim.parity(k.J[a])) % 2 &&
              (dim.parity(k.I[b]) + dim.parity(k.J[b])) % 2)
            sgn = -sgn;
    }
    std::vector<int> II(total), JJ(total);
    for (int t = 0; t < op.legs; ++t) {
      II[positions[t]] = k.I[t];
      JJ[positions[t]] = k.J[t];
    }
    for (long rest = 0; rest < nrest; ++rest) {
      auto rd = digits(rest, n, static_cast<int>(others.size()));
      for (size_t t = 0; t < others.size(); ++t) II[others[t]] = JJ[others[t]] = rd[t];
      int s = sgn * twist_sign(dim, II, JJ);
      long r = flat_index(II, n), c = flat_index(JJ, n);
      if (s < 0)
        out.mat(r, c) -= k.c;
      else
        out.mat(r, c) += k.c;
    }
  }
  return out;
}

template <class F>
GradedOp<F> matrix_unit(const GradedDim& dim, int i, int j) {
  if (i < 0 || j < 0 || i >= dim.n() || j >= dim.n()) throw std::out_of_range("matrix unit index out of range");
  return from_coeffs<F>(dim, 1, {{{i}, {j}, F(1)}});
}

// P = sum_{ij} (-1)^{p(j)} E_ij x E_ji
template <class F>
GradedOp<F> perm_P(const GradedDim& dim) {
  std::vector<Coeff<F>> cs;
  for (int i = 0; i < dim.n(); ++i)
    for (int j = 0; j < dim.n(); ++j) cs.push_back({{i, j}, {j, i}, F(dim.parity(j) ? -1 : 1)});
  return from_coeffs(dim, 2, cs);
}

// Q = sum_{ij} (-1)^{p(i)p(j) + p(i) + p(j)} E_ij x E_ij
template <class F>
GradedOp<F> build_Q(const GradedDim& dim) {
  std::vector<Coeff<F>> cs;
  for (int i = 0; i < dim.n(); ++i)
    for (int j = 0; j < dim.n(); ++j) {
      int pi = dim.parity(i), pj = dim.parity(j);
      cs.push_back({{i, i}, {j, j}, F((pi * pj + pi + pj) % 2 ? -1 : 1)});
    }
  return from_coeffs(dim, 2, cs);
}

// Exponents of D = diag[q^2, q^4, .., q^{2M}, q^{2M}, .., q^{2M-2N+2}].
std::vector<int> D_exponents(const GradedDim& dim);

// 1/x, raising DivisionByZero (GMP would trap on a zero rational).
template <class F>
F checked_inv(const F& x) {
  if (is_zero(x)) throw DivisionByZero("scalar vanishes at this point");
  return F(1) / x;
}

template <class F>
F power(const F& x, int k) {
  F r(1);
  F b = k < 0 ? F(F(1) / x) : x;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r = r * b;
  return r;
}

// D as displayed (inverse = false) or its inverse.
template <class F>
GradedOp<F> build_D(const GradedDim& dim, const F& q, bool inverse = false) {
  std::vector<Coeff<F>> cs;
  auto ex = D_exponents(dim);
  for (int i = 0; i < dim.n(); ++i) cs.push_back({{i}, {i}, power(q, inverse ? -ex[i] : ex[i])});
  return from_coeffs(dim, 1, cs);
}

// Partial supertranspose on one leg:
// (sum a_ji E_ji)^st = sum (-1)^{p(i)(p(i)+p(j))} a_ji E_ij.
template <class F>
GradedOp<F> supertranspose(const GradedOp<F>& op, int leg) {
  if (leg < 0 || leg >= op.legs) throw std::out_of_range("supertranspose: leg out of range");
  std::vector<Coeff<F>> out;
  for (auto k : graded_coeffs(op)) {
    int j = k.I[leg], i = k.J[leg];
    int pi = op.dim.parity(i), pj = op.dim.parity(j);
    std::swap(k.I[leg], k.J[leg]);
    if ((pi * (pi + pj)) % 2) k.c = -k.c;
    out.push_back(std::move(k));
  }
  return from_coeffs(op.dim, op.legs, out);
}

// Partial supertrace over the listed legs; the result lives on the
// remaining legs in their original order (a 0-leg result is a 1x1 matrix).
template <class F>
GradedOp<F> supertrace(const GradedOp<F>& op, const std::vector<int>& traced) {
  if (traced.empty()) throw std::invalid_argument("supertrace: no legs");
  std::vector<bool> tr(op.legs, false);
  for (int l : traced) {
    if (l < 0 || l >= op.legs) throw std::out_of_range("supertrace: leg out of range");
    tr[l] = true;
  }
  std::vector<Coeff<F>> out;
  for (const auto& k : graded_coeffs(op)) {
    bool diag = true;
    int s = 0;
    std::vector<int> I, J;
    for (int t = 0; t < op.legs; ++t) {
      if (tr[t]) {
        if (k.I[t] != k.J[t]) diag = false;
        s += op.dim.parity(k.I[t]);
      } else {
        I.push_back(k.I[t]);
        J.push_back(k.J[t]);
      }
    }
    if (!diag) continue;
    out.push_back({I, J, s % 2 ? F(-k.c) : k.c});
  }
  return from_coeffs(op.dim, op.legs - static_cast<int>(traced.size()), out);
}

template <class F>
F full_supertrace(const GradedOp<F>& op) {
  std::vector<int> all(op.legs);
  for (int i = 0; i < op.legs; ++i) all[i] = i;
  return supertrace(op, all).mat(0, 0);
}

// Parity of each basis vector of the product of `legs` copies.
std::vector<int> basis_parities(const GradedDim& dim, int legs);

}  // namespace sberez

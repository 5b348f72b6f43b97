// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sberez/rmatrix/rmatrix.hpp"
#include "sberez/tensor/opmatrix.hpp"

namespace sberez {

// An evaluation representation (one parameter) or a tensor product of them.
// Factor k contributes g_k(z) Rbar(z/a_k) with the first factor of R on the
// auxiliary leg and the second on W, and the scalar dressing
// g_k(z) = (z q - b_k/q)/(z - b_k) when dressed.
struct RepDesc {
  GradedDim dim;
  std::vector<Rational> a;
  std::vector<Rational> b;  // dressing parameters, empty if undressed

  int factors() const { return static_cast<int>(a.size()); }
  bool dressed() const { return !b.empty(); }
  std::string type() const { return a.size() == 1 ? "eval" : "tensor"; }
  int w_dim() const { return ipow(dim.n(), factors()); }
};

template <class F>
F dressing(const F& z, const F& q, const Rational& b) {
  return (z * q - F(b) / q) * checked_inv(F(z - F(b)));
}

// L(z) as an operator on W (legs 0..r-1) and the auxiliary leg r.
template <class F>
GradedOp<F> rep_op(const RepDesc& rep, const F& z, const F& q) {
  int r = rep.factors();
  GradedOp<F> out = GradedOp<F>::identity(rep.dim, r + 1);
  for (int k = 0; k < r; ++k) {
    F a(rep.a[k]);
    F s = z * q - a / q;
    F c = checked_inv(s);
    if (rep.dressed()) c = c * dressing(z, q, rep.b[k]);
    GradedOp<F> R = build_R(rep.dim, z, a, q).scaled(c);
    out = out * embed(R, {r, k}, r + 1);
  }
  return out;
}

// Polynomial numerator of an undressed representation, with the evaluation
// parameters given as ring elements (used for symbolic relation checks).
template <class F>
GradedOp<F> rep_op_poly(const GradedDim& dim, const std::vector<F>& a, const F& z, const F& q) {
  int r = static_cast<int>(a.size());
  GradedOp<F> out = GradedOp<F>::identity(dim, r + 1);
  for (int k = 0; k < r; ++k) out = out * embed(build_R(dim, z, a[k], q), {r, k}, r + 1);
  return out;
}

template <class F>
OpMatrix<F> rep_L(const RepDesc& rep, const F& z, const F& q) {
  return aux_blocks(rep_op(rep, z, q));
}

template <class F>
using LFun = std::function<OpMatrix<F>(const F&)>;

template <class F>
LFun<F> rep_lfun(const RepDesc& rep, const F& q) {
  return [rep, q](const F& z) { return rep_L(rep, z, q); };
}

// Place an operator on (W legs, aux) into a product with several auxiliary
// legs; W occupies legs 0..r-1 and the auxiliary leg goes to r + k.
template <class F>
GradedOp<F> place_aux(const GradedOp<F>& op, int r, int k, int total) {
  std::vector<int> pos;
  for (int i = 0; i < r; ++i) pos.push_back(i);
  pos.push_back(r + k);
  return embed(op, pos, total);
}

// Operator on auxiliary legs only, placed after r W legs.
template <class F>
GradedOp<F> place_on_aux(const GradedOp<F>& op, int r, const std::vector<int>& aux, int total) {
  std::vector<int> pos;
  for (int k : aux) pos.push_back(r + k);
  return embed(op, pos, total);
}

// First failing component of the relation written out in components, or
// an empty vector if every (a,b,c,d) component vanishes. l = L(z), lw = L(w).
template <class F>
std::vector<int> rll2_failure(const GradedDim& dim, const OpMatrix<F>& l, const OpMatrix<F>& lw, const F& z,
                              const F& w, const F& q, int* count = nullptr) {
  int n = dim.n();
  auto p = [&](int i) { return dim.parity(i); };
  auto qi = [&](int i) { return p(i) ? F(F(1) / q) : q; };
  auto sg = [](int e) { return e % 2 ? F(-1) : F(1); };
  F qq = q - F(1) / q;
  std::vector<int> first;
  int bad = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Mat<F> lhs = l.at(a, b) * lw.at(c, d);
          lhs = lhs.scaled((a == c ? F(z * qi(a) - w / qi(a)) : F(z - w)) * sg(p(a) * (p(c) + p(d))));
          if (a != c) {
            F co = (a > c ? w : z) * qq * sg(p(c) * p(d));
            lhs = lhs + (l.at(c, b) * lw.at(a, d)).scaled(co);
          }
          Mat<F> rhs = lw.at(c, d) * l.at(a, b);
          rhs = rhs.scaled((b == d ? F(z * qi(b) - w / qi(b)) : F(z - w)) * sg(p(b) * (p(c) + p(d))));
          if (b != d) {
            F co = (d > b ? w : z) * qq * sg(p(c) * p(d));
            rhs = rhs + (lw.at(c, b) * l.at(a, d)).scaled(co);
          }
          if (lhs != rhs) {
            ++bad;
            if (first.empty()) first = {a, b, c, d};
          }
        }
  if (count) *count = bad;
  return first;
}

// R_12(z,w) L_1(z) L_2(w) - L_2(w) L_1(z) R_12(z,w) on W x aux x aux, with
// L given as operators on (W legs, aux).
template <class F>
GradedOp<F> rll_matrix_residual(const GradedOp<F>& Lz, const GradedOp<F>& Lw, const GradedOp<F>& R, int r) {
  int total = r + 2;
  GradedOp<F> L1 = place_aux(Lz, r, 0, total), L2 = place_aux(Lw, r, 1, total);
  GradedOp<F> R12 = place_on_aux(R, r, {0, 1}, total);
  return R12 * L1 * L2 - L2 * L1 * R12;
}

}  // namespace sberez

// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sberez/tensor/graded.hpp"

namespace sberez {

// Square matrix whose entries are operators on a graded space W, i.e. an
// element sum_{ab} x_ab (x) E_ab of End(W) (x) End(C^k) with the algebra
// factor first. par[a] is the parity of row/column index a; wpar the
// parity of the W basis. Entries are stored as plain action matrices on W.
template <class F>
struct OpMatrix {
  std::vector<int> par;
  std::vector<int> wpar;
  std::vector<Mat<F>> e;

  OpMatrix() = default;
  OpMatrix(std::vector<int> p, std::vector<int> wp) : par(std::move(p)), wpar(std::move(wp)) {
    int k = size(), d = dW();
    e.assign(static_cast<size_t>(k) * k, Mat<F>(d, d));
  }
  int size() const { return static_cast<int>(par.size()); }
  int dW() const { return static_cast<int>(wpar.size()); }
  Mat<F>& at(int a, int b) { return e[static_cast<size_t>(a) * size() + b]; }
  const Mat<F>& at(int a, int b) const { return e[static_cast<size_t>(a) * size() + b]; }

  // Action matrix on W (x) C^k, index w*k + a.
  Mat<F> to_plain() const {
    int k = size(), d = dW();
    Mat<F> A(d * k, d * k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const Mat<F>& X = at(a, b);
        for (int wi = 0; wi < d; ++wi)
          for (int wj = 0; wj < d; ++wj) {
            const F& v = X(wi, wj);
            if (is_zero(v)) continue;
            bool neg = composition() == Composition::Koszul && ((par[a] + par[b]) * wpar[wj]) % 2;
            A(wi * k + a, wj * k + b) = neg ? F(-v) : v;
          }
      }
    return A;
  }

  static OpMatrix from_plain(const std::vector<int>& p, const std::vector<int>& wp, const Mat<F>& A) {
    OpMatrix X(p, wp);
    int k = X.size(), d = X.dW();
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        Mat<F>& Y = X.at(a, b);
        for (int wi = 0; wi < d; ++wi)
          for (int wj = 0; wj < d; ++wj) {
            const F& v = A(wi * k + a, wj * k + b);
            if (is_zero(v)) continue;
            bool neg = composition() == Composition::Koszul && ((p[a] + p[b]) * wp[wj]) % 2;
            Y(wi, wj) = neg ? F(-v) : v;
          }
      }
    return X;
  }

  // Graded matrix product and inverse in End(W) (x) End(C^k).
  OpMatrix operator*(const OpMatrix& o) const { return from_plain(par, wpar, to_plain() * o.to_plain()); }
  OpMatrix operator+(const OpMatrix& o) const {
    OpMatrix r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  OpMatrix operator-(const OpMatrix& o) const {
    OpMatrix r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  OpMatrix inverse() const { return from_plain(par, wpar, to_plain().inverse()); }

  OpMatrix sub(const std::vector<int>& idx) const {
    std::vector<int> p;
    for (int i : idx) p.push_back(par.at(i));
    OpMatrix r(p, wpar);
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) r.at(a, b) = at(idx[a], idx[b]);
    return r;
  }
  // pi(A)_{ij} = A_{k+1-i, k+1-j}
  OpMatrix reversed() const {
    std::vector<int> idx(size());
    for (int i = 0; i < size(); ++i) idx[i] = size() - 1 - i;
    return sub(idx);
  }
  bool operator==(const OpMatrix& o) const { return par == o.par && wpar == o.wpar && e == o.e; }
};

// Entry blocks of an operator whose last leg is the auxiliary copy of
// C^{M|N} and whose other legs form W.
template <class F>
OpMatrix<F> aux_blocks(const GradedOp<F>& op) {
  std::vector<int> p(op.dim.n());
  for (int i = 0; i < op.dim.n(); ++i) p[i] = op.dim.parity(i);
  return OpMatrix<F>::from_plain(p, basis_parities(op.dim, op.legs - 1), op.mat);
}

template <class F>
GradedOp<F> from_aux_blocks(const GradedDim& dim, int legs, const OpMatrix<F>& X) {
  return GradedOp<F>(dim, legs, X.to_plain());
}

}  // namespace sberez

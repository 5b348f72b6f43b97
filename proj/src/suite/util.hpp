// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

// Helpers shared by the check implementations.

#pragma once

#include <string>
#include <vector>

#include "sberez/berezinian/berezinian.hpp"
#include "sberez/suite/common.hpp"

namespace sberez {

inline json dim_params(const GradedDim& dim) { return json{{"m", dim.M}, {"n", dim.N}}; }

inline json rep_params(const RepDesc& rep, const Rational& q) {
  json p = dim_params(rep.dim);
  p["rep"] = rep_json(rep);
  p["q"] = q.get_str();
  return p;
}

inline std::string conv_name(Composition c) { return c == Composition::Koszul ? "koszul" : "plain"; }

// First differing entry, with the row and column multi-indices (1-based).
template <class F>
json op_witness(const GradedOp<F>& a, const GradedOp<F>& b) {
  json w = mat_witness(a.mat, b.mat);
  if (w.is_null()) return w;
  auto I = digits(w["entry"][0].get<long>(), a.dim.n(), a.legs);
  auto J = digits(w["entry"][1].get<long>(), a.dim.n(), a.legs);
  for (auto& x : I) ++x;
  for (auto& x : J) ++x;
  w["row"] = I;
  w["col"] = J;
  return w;
}

template <class F>
bool expect_op(CheckReport& r, const std::string& label, const GradedOp<F>& a, const GradedOp<F>& b) {
  bool ok = a == b;
  return r.expect(label, ok, ok ? json(nullptr) : op_witness(a, b));
}

template <class F>
void note_op(CheckReport& r, const std::string& label, const GradedOp<F>& a, const GradedOp<F>& b) {
  bool ok = a == b;
  r.note(label, ok, ok ? json(nullptr) : op_witness(a, b));
}

// Entry-block comparison of two operator matrices; the witness names the
// auxiliary entry (1-based) and the W entry.
template <class F>
json opmat_witness(const OpMatrix<F>& a, const OpMatrix<F>& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.at(i, j) != b.at(i, j)) {
        json w = mat_witness(a.at(i, j), b.at(i, j));
        w["aux"] = {i + 1, j + 1};
        return w;
      }
  return nullptr;
}

template <class F>
bool expect_opmat(CheckReport& r, const std::string& label, const OpMatrix<F>& a, const OpMatrix<F>& b) {
  bool ok = a == b;
  return r.expect(label, ok, ok ? json(nullptr) : opmat_witness(a, b));
}

template <class F>
void note_opmat(CheckReport& r, const std::string& label, const OpMatrix<F>& a, const OpMatrix<F>& b) {
  bool ok = a == b;
  r.note(label, ok, ok ? json(nullptr) : opmat_witness(a, b));
}

// Taylor coefficients of every entry, at z = infinity (in z^-1) or at z = 0.
inline std::vector<Mat<Rational>> mat_series(const Mat<ZRatN>& X, bool at_infinity, int K) {
  std::vector<Mat<Rational>> out(K + 1, Mat<Rational>(X.rows(), X.cols()));
  for (int i = 0; i < X.rows(); ++i)
    for (int j = 0; j < X.cols(); ++j) {
      if (X(i, j).zero()) continue;
      auto s = at_infinity ? series_at_infinity(X(i, j), K) : series_at_zero(X(i, j), K);
      for (int k = 0; k <= K; ++k) out[k](i, j) = s[k];
    }
  return out;
}

inline std::vector<OpMatrix<Rational>> opmat_series(const OpMatrix<ZRatN>& X, bool at_infinity, int K) {
  std::vector<OpMatrix<Rational>> out(K + 1, OpMatrix<Rational>(X.par, X.wpar));
  for (int a = 0; a < X.size(); ++a)
    for (int b = 0; b < X.size(); ++b) {
      auto s = mat_series(X.at(a, b), at_infinity, K);
      for (int k = 0; k <= K; ++k) out[k].at(a, b) = s[k];
    }
  return out;
}

// First entry l_ab of L with [x, l_ab] != 0, or null.
inline json commutator_witness(const Mat<Rational>& x, const OpMatrix<Rational>& L) {
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (x * L.at(a, b) != L.at(a, b) * x) return json{{"entry", {a + 1, b + 1}}};
  return nullptr;
}

// L(w) at a random regular point w.
inline OpMatrix<Rational> random_regular_L(const RepDesc& rep, const Rational& q, Rng& rng, Rational* w_out) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    Rational w = rng.rational();
    try {
      auto L = rep_L(rep, w, q);
      L.inverse();
      if (w_out) *w_out = w;
      return L;
    } catch (const SingularMatrix&) {
    } catch (const DivisionByZero&) {
    }
  }
  throw std::runtime_error("no regular evaluation point found");
}

// A value of F from a rational.
template <class F>
F lift(const Rational& x) {
  return F(x);
}

// Whether X is c * Id for a scalar c.
template <class F>
bool is_scalar_matrix(const Mat<F>& X) {
  if (X.rows() == 0) return true;
  F c = X(0, 0);
  for (int i = 0; i < X.rows(); ++i)
    for (int j = 0; j < X.cols(); ++j)
      if (X(i, j) != (i == j ? c : F(0))) return false;
  return true;
}

}  // namespace sberez

// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sberez/rtt/ncpoly.hpp"
#include "sberez/tensor/mat.hpp"

namespace sberez {

// Which relation to expand: both factors from L^+, both from L^-, or the
// crossed relation with L^+_1(z) L^-_2(w) and the formal symbol qc = q^c.
enum class RelKind { PlusPlus, MinusMinus, Crossed };
std::string rel_kind_name(RelKind k);

// L^+ is a series in z^{-1}, L^- a series in z.
struct Relation {
  int a, b, c, d;  // component indices, 0-based
  int mz, mw;      // order of the z and w coefficients
  NCPoly poly;     // left side minus right side
};

// Every component relation up to order K. Zero relations are dropped.
std::vector<Relation> expand_rll(const GradedDim& dim, RelKind kind, int K);

using NCSeries = std::vector<NCPoly>;  // coefficients 0..K

NCSeries series_mul(const NCSeries& a, const NCSeries& b);
NCSeries series_add(const NCSeries& a, const NCSeries& b);
NCSeries series_scaled(const NCSeries& a, const MPoly& c);
// Inverse of a series whose constant term is a diagonal r = 0 generator
// (or its inverse).
NCSeries series_inverse_diag(const NCSeries& a);

// Matrix of series in the generators of one family.
struct AbstractL {
  GradedDim dim;
  int sign = +1;
  int K = 0;
  std::vector<NCSeries> e;  // row-major

  AbstractL() = default;
  AbstractL(GradedDim d, int s, int k);
  NCSeries& at(int i, int j) { return e[static_cast<size_t>(i) * dim.n() + j]; }
  const NCSeries& at(int i, int j) const { return e[static_cast<size_t>(i) * dim.n() + j]; }
  int n() const { return dim.n(); }
};

// The generator matrix L^{sign}(z) to order K, with the order-0 zeros.
AbstractL generic_L(const GradedDim& dim, int sign, int K);
// Graded product: (XY)_{il} = sum_j (-1)^{(p_i+p_j)(p_j+p_l)} X_ij Y_jl.
AbstractL graded_product(const AbstractL& x, const AbstractL& y);
// L(z q^{2k}) as a series in the family's variable.
AbstractL shift_arg(const AbstractL& x, int k);
bool is_identity(const AbstractL& x);

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inverse through order K via the triangular order-0 part; checks
// L * L^{-1} = 1 before returning.
AbstractL invert_L_series(const AbstractL& L);

// The permutation-sum Berezinian of the generator matrix, to order K.
NCSeries berezinian_abstract(const GradedDim& dim, int sign, int K);
// The product of diagonal series l_11(z) ... l_{M+N,M+N}(zq^{2M-2N})^{-1}.
NCSeries hc_formula(const GradedDim& dim, int sign, int K);

// Evaluate a polynomial in a representation: gen supplies the operator of
// each generator, q the value of q; qc is set to 1 (c = 0).
Mat<Rational> instantiate(const NCPoly& p, const std::function<Mat<Rational>(const GenIndex&)>& gen,
                          const Rational& q, int wdim);

}  // namespace sberez

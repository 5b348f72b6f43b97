// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "sberez/suite/common.hpp"
#include "sberez/tensor/graded.hpp"
#include "sberez/tensor/opmatrix.hpp"

namespace sberez {
namespace {

using Op = GradedOp<Rational>;

const std::vector<GradedDim> kDims = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};

Op random_op(const GradedDim& dim, int legs, Rng& rng) {
  Op x(dim, legs);
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (rng.raw() % 3) x.mat(i, j) = rng.rational();
  return x;
}

Rational entry(const Op& op, std::vector<int> row, std::vector<int> col) {
  int n = op.dim.n();
  return op.mat(flat_index(row, n), flat_index(col, n));
}

TEST(MatrixUnit, Definition) {
  GradedDim d(1, 1);
  Op e = matrix_unit<Rational>(d, 0, 1);
  EXPECT_EQ(e.mat(0, 1), 1);
  EXPECT_EQ(e.mat.first_nonzero(), std::make_pair(0, 1));
  Op e33 = matrix_unit<Rational>(GradedDim(2, 1), 2, 2);
  EXPECT_EQ(e33.mat(2, 2), 1);
  EXPECT_THROW(matrix_unit<Rational>(d, 2, 0), std::out_of_range);
}

TEST(MatrixUnit, Composition) {
  GradedDim d(1, 1);
  EXPECT_EQ(matrix_unit<Rational>(d, 0, 1) * matrix_unit<Rational>(d, 1, 0), matrix_unit<Rational>(d, 0, 0));
}

TEST(Embed, SecondFactor) {
  GradedDim d(2, 1);
  Op e = embed(matrix_unit<Rational>(d, 0, 0), {1}, 2);
  Op expect(d, 2);
  for (int a = 0; a < d.n(); ++a) expect.mat(flat_index({a, 0}, 3), flat_index({a, 0}, 3)) = 1;
  EXPECT_EQ(e, expect);
  EXPECT_THROW(embed(matrix_unit<Rational>(d, 0, 0), {2}, 2), std::out_of_range);
}

TEST(Embed, PermutationOnThreeLegs) {
  GradedDim d(1, 1);
  Op P = perm_P<Rational>(d);
  Op P12 = embed(P, {0, 1}, 3);
  EXPECT_EQ(P12 * P12, Op::identity(d, 3));
  Op P23 = embed(P, {1, 2}, 3);
  EXPECT_EQ(P12 * P23 * P12, P23 * P12 * P23);
  EXPECT_EQ(P12 * P23 * P12, embed(P, {0, 2}, 3));
}

TEST(Embed, OddUnitOnSecondLegPicksUpKoszulSign) {
  // (1 x E_21)(e_2 x e_1) = (-1)^{|E_21||e_2|} e_2 x e_2 under the graded convention.
  GradedDim d(1, 1);
  Op E21 = matrix_unit<Rational>(d, 1, 0);
  EXPECT_EQ(entry(embed(E21, {1}, 2), {1, 1}, {1, 0}), -1);
  CompositionScope plain(Composition::Plain);
  EXPECT_EQ(entry(embed(E21, {1}, 2), {1, 1}, {1, 0}), 1);
}

TEST(Embed, CommutesWithComposition) {
  Rng rng(1, "embed");
  for (const auto& d : kDims) {
    Op a = random_op(d, 1, rng), b = random_op(d, 1, rng);
    for (int pos : {0, 2}) EXPECT_EQ(embed(a * b, {pos}, 3), embed(a, {pos}, 3) * embed(b, {pos}, 3));
    Op x = random_op(d, 2, rng), y = random_op(d, 2, rng);
    EXPECT_EQ(embed(x * y, {2, 0}, 3), embed(x, {2, 0}, 3) * embed(y, {2, 0}, 3));
  }
}

TEST(Embed, DisjointEvenOperatorsCommute) {
  Rng rng(2, "disjoint");
  GradedDim d(2, 1);
  // Even single-leg operators: block diagonal in the grading.
  auto even = [&] {
    Op x = random_op(d, 1, rng);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (d.parity(i) != d.parity(j)) x.mat(i, j) = 0;
    return x;
  };
  Op a = even(), b = even();
  EXPECT_EQ(embed(a, {0}, 2) * embed(b, {1}, 2), embed(b, {1}, 2) * embed(a, {0}, 2));
}

TEST(Permutation, ActionOnBasis) {
  GradedDim d(1, 1);
  Op P = perm_P<Rational>(d);
  EXPECT_EQ(entry(P, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(entry(P, {0, 1}, {0, 1}), 0);
  EXPECT_EQ(entry(P, {1, 1}, {1, 1}), -1);
  for (const auto& dd : kDims) {
    Op Q = perm_P<Rational>(dd);
    EXPECT_EQ(Q * Q, Op::identity(dd, 2)) << dd.str();
  }
}

TEST(Permutation, SwapsLegs) {
  Rng rng(3, "swap");
  for (const auto& d : kDims) {
    Op P = perm_P<Rational>(d);
    Op a = random_op(d, 1, rng);
    EXPECT_EQ(P * embed(a, {0}, 2) * P, embed(a, {1}, 2)) << d.str();
  }
}

TEST(Supertranspose, UnitMatrices) {
  // A^st = sum (-1)^{p(i)(p(i)+p(j))} a_ji E_ij: the coefficient of E_21 in
  // E_12^st carries (-1)^{p(2)(p(2)+p(1))} = -1 on (1|1).
  GradedDim d(1, 1);
  Op E12 = matrix_unit<Rational>(d, 0, 1), E21 = matrix_unit<Rational>(d, 1, 0);
  EXPECT_EQ(supertranspose(E12, 0), E21.scaled(Rational(-1)));
  EXPECT_EQ(supertranspose(E21, 0), E12);
  EXPECT_EQ(supertranspose(supertranspose(E12, 0), 0), E12.scaled(Rational(-1)));
}

TEST(Supertranspose, OrderFour) {
  Rng rng(4, "st4");
  for (const auto& d : kDims) {
    Op a = random_op(d, 2, rng);
    for (int leg : {0, 1}) {
      Op s = a;
      for (int k = 0; k < 4; ++k) s = supertranspose(s, leg);
      EXPECT_EQ(s, a) << d.str();
    }
  }
  EXPECT_THROW(supertranspose(Op(GradedDim(1, 1), 1), 1), std::out_of_range);
}

TEST(Supertrace, IdentityAndUnits) {
  for (const auto& d : kDims) {
    EXPECT_EQ(full_supertrace(Op::identity(d, 1)), d.M - d.N);
    EXPECT_EQ(full_supertrace(Op::identity(d, 2)), (d.M - d.N) * (d.M - d.N));
    for (int i = 0; i < d.n(); ++i)
      for (int j = 0; j < d.n(); ++j)
        if (i != j) EXPECT_EQ(full_supertrace(matrix_unit<Rational>(d, i, j)), 0);
  }
}

TEST(Supertrace, CyclicUnderSupertranspose) {
  Rng rng(5, "strst");
  for (const auto& d : kDims) {
    for (int t = 0; t < 3; ++t) {
      Op x = random_op(d, 1, rng), y = random_op(d, 1, rng);
      EXPECT_EQ(full_supertrace(x * y), full_supertrace(supertranspose(x, 0) * supertranspose(y, 0))) << d.str();
      EXPECT_EQ(full_supertrace(x + y), full_supertrace(x) + full_supertrace(y));
    }
  }
}

TEST(Supertrace, PartialTraceOfProduct) {
  Rng rng(6, "partial");
  GradedDim d(1, 1);
  Op a = random_op(d, 1, rng), b = random_op(d, 1, rng);
  // str_2 (a x b) = str(b) a
  Op ab = embed(a, {0}, 2) * embed(b, {1}, 2);
  EXPECT_EQ(supertrace(ab, {1}), a.scaled(full_supertrace(b)));
}

TEST(DMatrix, ReadOff) {
  EXPECT_EQ(D_exponents(GradedDim(2, 1)), (std::vector<int>{2, 4, 4}));
  EXPECT_EQ(D_exponents(GradedDim(2, 2)), (std::vector<int>{2, 4, 4, 2}));
  EXPECT_EQ(D_exponents(GradedDim(1, 0)), (std::vector<int>{2}));
  EXPECT_EQ(D_exponents(GradedDim(0, 2)), (std::vector<int>{0, -2}));
  Rational q(3);
  Op D = build_D(GradedDim(2, 1), q), Di = build_D(GradedDim(2, 1), q, true);
  EXPECT_EQ(D.mat(1, 1), 81);
  EXPECT_EQ(D * Di, Op::identity(GradedDim(2, 1), 1));
}

int rank(Mat<Rational> a) {
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) p = i;
    if (p < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

TEST(QOperator, RankOne) {
  for (const auto& d : kDims) EXPECT_EQ(rank(build_Q<Rational>(d).mat), 1) << d.str();
}

TEST(QOperator, TransfersAcrossLegs) {
  Rng rng(7, "Q");
  for (const auto& d : kDims) {
    Op Q = build_Q<Rational>(d);
    for (int t = 0; t < 3; ++t) {
      Op x = random_op(d, 1, rng);
      Op st = supertranspose(x, 0);
      EXPECT_EQ(Q * embed(x, {0}, 2), Q * embed(st, {1}, 2)) << d.str();
      EXPECT_EQ(embed(x, {0}, 2) * Q, embed(st, {1}, 2) * Q) << d.str();
    }
  }
}

TEST(OpMatrix, GradedCoefficientRoundTrip) {
  Rng rng(8, "coeffs");
  for (const auto& d : kDims) {
    Op x = random_op(d, 2, rng);
    EXPECT_EQ(from_coeffs(d, 2, graded_coeffs(x)), x);
  }
}

TEST(Mat, InverseAndSingular) {
  Mat<Rational> a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  EXPECT_TRUE((a * a.inverse()).is_identity());
  Mat<Rational> s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  EXPECT_THROW(s.inverse(), SingularMatrix);
}

}  // namespace
}  // namespace sberez

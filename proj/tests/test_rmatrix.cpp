// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "sberez/berezinian/berezinian.hpp"
#include "sberez/rmatrix/rmatrix.hpp"
#include "sberez/scalar/mpoly.hpp"
#include "sberez/scalar/series.hpp"
#include "sberez/suite/checks.hpp"

namespace sberez {
namespace {

const std::vector<GradedDim> kSmall = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 0}, {0, 2}};

bool info_holds(const CheckReport& r, const std::string& prefix) {
  for (const auto& s : r.subs)
    if (s.informational && s.label.rfind(prefix, 0) == 0) return s.ok;
  ADD_FAILURE() << "no informational assertion starting with " << prefix;
  return false;
}

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& s : r.subs)
    if (!s.informational && !s.ok) out += s.label + "; ";
  return out;
}

TEST(RMatrix, DiagonalCoefficients) {
  MPoly z = MPoly::var("z"), w = MPoly::var("w"), q = MPoly::var("q"), qi = MPoly::var("q", -1);
  GradedDim d(2, 1);
  auto R = build_R(d, z, w, q);
  for (const auto& k : graded_coeffs(R)) {
    if (k.I == std::vector<int>{0, 0} && k.J == std::vector<int>{0, 0}) EXPECT_EQ(k.c, z * q - w * qi);
    if (k.I == std::vector<int>{2, 2} && k.J == std::vector<int>{2, 2}) EXPECT_EQ(k.c, z * qi - w * q);
    if (k.I == std::vector<int>{0, 1} && k.J == std::vector<int>{0, 1}) EXPECT_EQ(k.c, z - w);
  }
}

TEST(RMatrix, DifferenceOfConstantParts) {
  MPoly q = MPoly::var("q"), qi = MPoly::var("q", -1);
  for (const auto& d : kSmall) {
    auto diff = build_R_const(d, q) - build_R_prime(d, q);
    EXPECT_EQ(diff, perm_P<MPoly>(d).scaled(q - qi)) << d.str();
  }
}

TEST(RMatrix, EvenLineIsScalar) {
  MPoly z = MPoly::var("z"), w = MPoly::var("w"), q = MPoly::var("q"), qi = MPoly::var("q", -1);
  auto R = build_R(GradedDim(1, 0), z, w, q);
  ASSERT_EQ(R.size(), 1);
  EXPECT_EQ(R.mat(0, 0), z * q - w * qi);
  ZRat x = ZRat::var();
  EXPECT_EQ(build_Rbar(GradedDim(1, 0), x, ZRat(QRat::var())).mat(0, 0), ZRat(1));
}

TEST(QYBE, HoldsAndFixesTheConvention) {
  for (const auto& d : {GradedDim(1, 1), GradedDim(2, 1), GradedDim(1, 0)}) {
    auto r = check_qybe(d);
    r.finish();
    EXPECT_TRUE(r.passed()) << d.str() << " " << failures(r);
    EXPECT_EQ(r.data["default_convention"], "koszul");
  }
  // The plain convention is rejected as soon as both parities occur.
  auto r = check_qybe(GradedDim(1, 1));
  EXPECT_FALSE(info_holds(r, "yang-baxter under the plain"));
}

TEST(Unitarity, ProductIsIdentityAndOneQFlipReadingHolds) {
  for (const auto& d : {GradedDim(1, 1), GradedDim(2, 1), GradedDim(1, 0)}) {
    auto r = check_unitarity_qflip(d);
    r.finish();
    EXPECT_TRUE(r.passed()) << d.str() << " " << failures(r);
  }
  auto r = check_unitarity_qflip(GradedDim(2, 1));
  EXPECT_TRUE(r.data["qflip"]["coefficients"].get<bool>());
  EXPECT_FALSE(r.data["qflip"]["grading_swap"].get<bool>());
}

TEST(Crossing, EqualDimensionsUnnormalized) {
  auto r = check_crossing(GradedDim(1, 1), 6);
  r.finish();
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_EQ(r.data["normalized"], "skipped: f undefined for M=N");
}

// Crossing exactly as displayed, with D = diag[q^2, ..., q^{2M-2N+2}].
TEST(Crossing, AsDisplayedTwoOne) {
  auto r = check_crossing(GradedDim(2, 1), 6);
  r.finish();
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Crossing, AsDisplayedOneTwo) {
  auto r = check_crossing(GradedDim(1, 2), 6);
  r.finish();
  EXPECT_TRUE(r.passed()) << failures(r);
}

// The same identities with D replaced by its inverse.
TEST(Crossing, WithInverseD) {
  for (const auto& d : {GradedDim(2, 1), GradedDim(1, 2), GradedDim(2, 0), GradedDim(2, 2)}) {
    auto r = check_crossing(d, 4);
    EXPECT_TRUE(info_holds(r, "(Rbar(x)^-1)^st2 D^-1_2")) << d.str();
    EXPECT_TRUE(info_holds(r, "Rbar(xs)^st1 D^-1_1")) << d.str();
    EXPECT_TRUE(info_holds(r, "crossing scalar g satisfies the f functional relation (D^-1)")) << d.str();
  }
}

TEST(Crossing, ScalarMatchesFunctionalRelation) {
  // g(x) (1 - x q^-2)(1 - x s q^2) = (1 - x)(1 - x s), s = q^{2N-2M}
  auto r = check_crossing(GradedDim(1, 2), 2);
  ASSERT_TRUE(r.data.contains("g_inverse_D"));
  ZRat x = ZRat::var(), q(QRat::var());
  ZRat s = power(q, 2), one(1);
  ZRat g = (one - x) * (one - x * s) / ((one - x * power(q, -2)) * (one - x * s * power(q, 2)));
  EXPECT_EQ(r.data["g_inverse_D"], render(g));
}

TEST(Hecke, QuadraticAndBraid) {
  for (const auto& d : kSmall) {
    auto r = check_hecke(d);
    r.finish();
    EXPECT_TRUE(r.passed()) << d.str() << " " << failures(r);
  }
}

TEST(Symmetrizers, TwoFoldAntisymmetrizer) {
  QRat q = QRat::var();
  GradedDim d(2, 1);
  auto A2 = symmetrizer_rec(d, q, 2, true, 0, 2);
  auto expect = rhat_qpow(d, q, -1, 0, 2).scaled(QRat(1) / (q * q - QRat(1) / (q * q)));
  EXPECT_EQ(A2.value(), expect);
}

TEST(Symmetrizers, OneFoldIsIdentity) {
  QRat q = QRat::var();
  GradedDim d(1, 1);
  EXPECT_EQ(symmetrizer_rec(d, q, 1, true, 0, 1).value(), GradedOp<QRat>::identity(d, 1));
  EXPECT_EQ(symmetrizer_rec(d, q, 1, false, 0, 1).value(), GradedOp<QRat>::identity(d, 1));
}

TEST(Symmetrizers, IdempotentTwoFold) {
  MPoly q = MPoly::var("q");
  GradedDim d(1, 1);
  EXPECT_TRUE(symmetrizer_rec(d, q, 2, true, 0, 2).idempotent());
  EXPECT_TRUE(symmetrizer_rec(d, q, 2, false, 0, 2).idempotent());
}

TEST(Symmetrizers, FullCheck) {
  for (const auto& d : {GradedDim(1, 1), GradedDim(2, 1)}) {
    auto r = check_symmetrizers(d, 3);
    r.finish();
    EXPECT_TRUE(r.passed()) << d.str() << " " << failures(r);
  }
}

TEST(Fusion, EvaluationModules) {
  Rational q(3, 5);
  RepDesc one{GradedDim(1, 1), {Rational(2)}, {}};
  Rng rng(1, "fusion");
  auto r1 = check_fusion(one, q, 1, Mode::Symbolic, rng, 3);
  r1.finish();
  EXPECT_TRUE(r1.passed()) << failures(r1);
  auto r2 = check_fusion(one, q, 2, Mode::Symbolic, rng, 3);
  r2.finish();
  EXPECT_TRUE(r2.passed()) << failures(r2);
  RepDesc two{GradedDim(2, 1), {Rational(5)}, {Rational(-7, 3)}};
  auto r3 = check_fusion(two, q, 3, Mode::Points, rng, 3);
  r3.finish();
  EXPECT_TRUE(r3.passed()) << failures(r3);
}

}  // namespace
}  // namespace sberez

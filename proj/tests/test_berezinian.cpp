// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "sberez/berezinian/berezinian.hpp"
#include "sberez/suite/checks.hpp"

namespace sberez {
namespace {

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& s : r.subs)
    if (!s.informational && !s.ok) out += s.label + "; ";
  return out;
}

bool info_holds(const CheckReport& r, const std::string& prefix) {
  bool seen = false;
  for (const auto& s : r.subs)
    if (s.informational && s.label.rfind(prefix, 0) == 0) {
      seen = true;
      if (!s.ok) return false;
    }
  if (!seen) ADD_FAILURE() << "no informational assertion starting with " << prefix;
  return seen;
}

CheckReport finished(CheckReport r) {
  r.finish();
  return r;
}

Mat<Rational> scalar(const Rational& x) {
  Mat<Rational> m(1, 1);
  m(0, 0) = x;
  return m;
}

TEST(Quasideterminant, CommutativeTwoByTwo) {
  OpMatrix<Rational> X({0, 0}, {0});
  X.at(0, 0) = scalar(Rational(3));
  X.at(0, 1) = scalar(Rational(5));
  X.at(1, 0) = scalar(Rational(-2));
  X.at(1, 1) = scalar(Rational(7));
  // |X|_11 = a11 - a12 a22^-1 a21
  EXPECT_EQ(quasidet(X, 0, 0), scalar(Rational(3) + Rational(10, 7)));
  EXPECT_EQ(quasidet(X, 1, 1), scalar(Rational(7) + Rational(10, 3)));
  // |X|_12 = a12 - a11 a21^-1 a22
  EXPECT_EQ(quasidet(X, 0, 1), scalar(Rational(5) + Rational(21, 2)));
}

TEST(Quasideterminant, OneByOne) {
  OpMatrix<Rational> X({0}, {0, 0});
  X.at(0, 0)(0, 0) = 2;
  X.at(0, 0)(0, 1) = 1;
  X.at(0, 0)(1, 1) = 4;
  EXPECT_EQ(quasidet(X, 0, 0), X.at(0, 0));
}

TEST(BerezinianSum, EvenLineIsTheGenerator) {
  RepDesc rep{GradedDim(1, 0), {Rational(3)}, {}};
  Rational q(2, 5), z(7, 3);
  EXPECT_EQ(ber_sum(rep.dim, rep_lfun(rep, q), z, q), rep_L(rep, z, q).at(0, 0));
}

TEST(BerezinianSum, OneOneIsGeneratorTimesInverseEntry) {
  RepDesc rep{GradedDim(1, 1), {Rational(2), Rational(-3)}, {}};
  Rational q(5, 3), z(11, 7);
  auto L = rep_L(rep, z, q);
  auto Li = L.inverse();
  // Li is the two-sided inverse in the graded sense.
  EXPECT_TRUE((L.to_plain() * Li.to_plain()).is_identity());
  EXPECT_TRUE((Li.to_plain() * L.to_plain()).is_identity());
  EXPECT_EQ(ber_sum(rep.dim, rep_lfun(rep, q), z, q), L.at(0, 0) * Li.at(1, 1));
}

TEST(BerezinianSum, ScalarOnEvaluationModule) {
  RepDesc rep{GradedDim(1, 1), {Rational(2)}, {}};
  Rational q(3), z(5);
  Mat<Rational> B = ber_sum(rep.dim, rep_lfun(rep, q), z, q);
  ASSERT_EQ(B.rows(), 2);
  EXPECT_EQ(B(0, 1), 0);
  EXPECT_EQ(B(1, 0), 0);
  EXPECT_EQ(B(0, 0), B(1, 1));
}

TEST(Decomposition, ProductOfQuasideterminants) {
  Rational q(4, 3);
  for (const auto& d : {GradedDim(2, 0), GradedDim(2, 1), GradedDim(1, 2)}) {
    Rng rng(1, "decomp" + d.str());
    auto r = finished(check_decomposition(random_rep(d, 1, rng), q, Mode::Points, rng, 2));
    EXPECT_TRUE(r.passed()) << d.str() << " " << failures(r);
  }
}

TEST(Decomposition, TwoZeroByHand) {
  // For (2|0) the factors are l_11(z) and |L(zq^2)|_22.
  RepDesc rep{GradedDim(2, 0), {Rational(3)}, {}};
  Rational q(2), z(5, 7);
  auto L = rep_lfun(rep, q);
  auto fs = decomposition_factors(rep.dim, L, z, q);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0], L(z).at(0, 0));
  EXPECT_EQ(fs[1], quasidet(L(z * q * q), 1, 1));
  EXPECT_EQ(fs[0] * fs[1], ber_sum(rep.dim, L, z, q));
}

TEST(Centrality, CoefficientsAreCentral) {
  Rng rng(2, "central");
  RepDesc rep = random_rep(GradedDim(1, 1), 2, rng);
  auto r = finished(check_centrality(rep, Rational(5, 2), Mode::Symbolic, rng, 2, 4));
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Centrality, LeadingCoefficientTwoOne) {
  Rng rng(3, "central21");
  RepDesc rep = random_rep(GradedDim(2, 1), 1, rng);
  auto r = finished(check_centrality(rep, Rational(-3, 4), Mode::Points, rng, 2, 2));
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Zeta, ScalarUnderInverseD) {
  Rng rng(4, "zeta");
  RepDesc rep = random_rep(GradedDim(1, 1), 1, rng);
  auto r = check_zeta(rep, Rational(7, 5), Mode::Points, rng, 2);
  EXPECT_TRUE(info_holds(r, "L(zs)^st D^-1 (L(z)^-1)^st = zeta D^-1"));
  EXPECT_TRUE(info_holds(r, "(L(z)^-1)^st D L(zs)^st = zeta D"));
  EXPECT_TRUE(info_holds(r, "entrywise zeta with D^-1 weights"));
}

// The same statements with D itself.
TEST(Zeta, AsDisplayed) {
  Rng rng(5, "zeta literal");
  RepDesc rep = random_rep(GradedDim(2, 1), 1, rng);
  auto r = finished(check_zeta(rep, Rational(7, 5), Mode::Points, rng, 2));
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Liouville, BerezinianShift) {
  Rng rng(6, "liouville");
  for (const auto& d : {GradedDim(1, 1), GradedDim(2, 1)}) {
    auto r = finished(check_liouville(random_rep(d, 1, rng), Rational(3, 2), Mode::Points, rng, 2));
    EXPECT_TRUE(r.passed()) << d.str() << " " << failures(r);
  }
}

TEST(DoubleDefinition, SignedFusionFormHolds) {
  Rng rng(7, "double");
  for (const auto& d : {GradedDim(1, 1), GradedDim(2, 1), GradedDim(1, 2)}) {
    auto r = check_ber_double(random_rep(d, 1, rng), Rational(2, 3), Mode::Points, rng, 2);
    EXPECT_TRUE(info_holds(r, "fusion form = (-1)^N permutation-sum form")) << d.str();
  }
}

TEST(DoubleDefinition, AsDisplayedEvenN) {
  Rng rng(8, "double literal");
  for (const auto& d : {GradedDim(2, 0), GradedDim(1, 2)}) {
    auto r = finished(check_ber_double(random_rep(d, 1, rng), Rational(2, 3), Mode::Points, rng, 2));
    EXPECT_TRUE(r.passed()) << d.str() << " " << failures(r);
  }
}

// With N odd the two forms differ by a sign.
TEST(DoubleDefinition, AsDisplayedOddN) {
  Rng rng(9, "double odd");
  auto r = finished(check_ber_double(random_rep(GradedDim(1, 1), 1, rng), Rational(2, 3), Mode::Points, rng, 2));
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Jacobi, InvertedFormHoldsForAllSubsets) {
  Rng rng(10, "jacobi");
  for (const auto& d : {GradedDim(2, 0), GradedDim(2, 1)}) {
    auto r = check_jacobi(random_rep(d, 1, rng), Rational(5, 3), Mode::Points, rng, 1);
    EXPECT_TRUE(info_holds(r, "B(z) = B_q(L_I) B_{q^-1}((L(zq^{2M-2N-2})^-1)_{I^c})^-1")) << d.str();
  }
}

TEST(Jacobi, AsDisplayed) {
  Rng rng(11, "jacobi literal");
  auto r = finished(check_jacobi(random_rep(GradedDim(2, 1), 1, rng), Rational(5, 3), Mode::Points, rng, 1));
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Schur, BlockFactorization) {
  Rng rng(12, "schur");
  for (const auto& d : {GradedDim(2, 1), GradedDim(1, 2), GradedDim(3, 0)}) {
    auto r = check_schur(random_rep(d, 1, rng), Rational(3, 7), Mode::Points, rng, 1);
    int checked = 0;
    for (const auto& s : r.subs) {
      if (s.informational || s.label.rfind("B(z) = B_q(L_11)", 0) != 0) continue;
      ++checked;
      EXPECT_TRUE(s.ok) << d.str() << " " << s.label;
    }
    EXPECT_EQ(checked, d.n() - 1) << d.str();
  }
}

TEST(Schur, CorollaryWithShiftTwoMMinusTwo) {
  Rng rng(12, "schur corollary");
  for (const auto& d : {GradedDim(2, 1), GradedDim(1, 2)}) {
    auto r = check_schur(random_rep(d, 1, rng), Rational(3, 7), Mode::Points, rng, 1);
    ASSERT_TRUE(r.data.contains("working_shifts")) << d.str();
    auto good = r.data["working_shifts"]["corollary"];
    EXPECT_NE(std::find(good.begin(), good.end(), json(2 * d.M - 2)), good.end()) << d.str() << " " << good.dump();
  }
}

// The corollary exactly as displayed, with the Schur complement at zq^{2M}.
TEST(Schur, CorollaryAsDisplayed) {
  Rng rng(12, "schur literal");
  auto r = finished(check_schur(random_rep(GradedDim(2, 1), 1, rng), Rational(3, 7), Mode::Points, rng, 1));
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Sylvester, OneStep) {
  Rng rng(13, "sylvester");
  RepDesc enlarged = random_rep(GradedDim(2, 1), 1, rng);
  auto r = finished(check_sylvester(1, enlarged, Rational(5, 4), Mode::Points, rng, 2));
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(MacMahon, SmallOrders) {
  Rng rng(14, "macmahon");
  RepDesc rep = random_rep(GradedDim(1, 1), 1, rng);
  for (int k : {1, 2}) {
    auto r = finished(check_macmahon(rep, Rational(3, 5), k, Mode::Points, rng, 1));
    EXPECT_TRUE(r.passed()) << "k=" << k << " " << failures(r);
  }
}

}  // namespace
}  // namespace sberez

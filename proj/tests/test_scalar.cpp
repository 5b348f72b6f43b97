// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "sberez/scalar/mpoly.hpp"
#include "sberez/scalar/ratfun.hpp"
#include "sberez/scalar/series.hpp"
#include "sberez/suite/common.hpp"

namespace sberez {
namespace {

QRat qv() { return QRat::var(); }

// Random Laurent-free rational function in q with small coefficients.
QRat random_qrat(Rng& rng) {
  auto poly = [&](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rng.rational());
    return UPoly<Rational>(c);
  };
  return QRat(poly(static_cast<int>(rng.raw() % 3)), poly(static_cast<int>(rng.raw() % 3)));
}

TEST(QRat, DifferenceOfSquares) {
  QRat q = qv(), qi = QRat(1) / q;
  EXPECT_EQ((q - qi) * (q + qi), q * q - qi * qi);
}

TEST(QRat, QIntegerTwo) {
  QRat q = qv(), qi = QRat(1) / q;
  QRat two = (q * q - qi * qi) / (q - qi);
  EXPECT_EQ(two, q + qi);
  EXPECT_EQ(q_int(2), q + qi);
  EXPECT_EQ(q_factorial(3), q_int(1) * q_int(2) * q_int(3));
}

TEST(QRat, SelfDivisionIsOne) {
  Rng rng(7, "self");
  for (int i = 0; i < 20; ++i) {
    QRat x = random_qrat(rng);
    if (x.zero()) continue;
    EXPECT_EQ(x / x, QRat(1));
  }
}

TEST(QRat, DivisionByZeroThrows) {
  EXPECT_THROW(qv() / QRat(0), DivisionByZero);
  try {
    qv() / QRat(0);
  } catch (const DivisionByZero& e) {
    EXPECT_FALSE(e.operand().empty());
  }
}

TEST(QRat, FieldAxiomsOnRandomTriples) {
  Rng rng(11, "field");
  for (int t = 0; t < 40; ++t) {
    QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    if (!b.zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a - a, QRat(0));
  }
}

TEST(QRat, CanonicalFormMakesEqualityStructural) {
  QRat q = qv();
  QRat a = (q * q - QRat(1)) / (q - QRat(1));
  EXPECT_EQ(a, q + QRat(1));
  EXPECT_EQ(a.den(), UPoly<Rational>(Rational(1)));
  // Denominators are normalized to a positive leading coefficient.
  QRat b = QRat(1) / (QRat(-2) * q);
  EXPECT_GT(sgn(b.den().lc()), 0);
}

TEST(Spectral, ScaleByQSquared) {
  ZRat z = ZRat::var();
  EXPECT_EQ(z.scale_var(q_pow(2)), z * ZRat(q_pow(2)));
  EXPECT_EQ(z.scale_var(q_pow(0)), z);
}

TEST(Spectral, ScaleInMultivariatePolynomial) {
  MPoly z = MPoly::var("z"), w = MPoly::var("w"), q = MPoly::var("q"), qi = MPoly::var("q", -1);
  MPoly f = z * q - w * qi;
  // z -> z q^-2
  MPoly g = f.scale_var(var_index("z"), MPoly::var("q", -2));
  EXPECT_EQ(g, z * qi - w * qi);
}

TEST(Spectral, ScaleRoundTrip) {
  Rng rng(3, "roundtrip");
  ZRat z = ZRat::var();
  for (int t = 0; t < 5; ++t) {
    ZRat f = (z * ZRat(random_qrat(rng)) + ZRat(random_qrat(rng))) / (z * z + ZRat(random_qrat(rng)) + ZRat(1));
    for (int k = -3; k <= 3; ++k) EXPECT_EQ(f.scale_var(q_pow(2 * k)).scale_var(q_pow(-2 * k)), f);
  }
}

TEST(Series, ReciprocalAndProduct) {
  auto s = TruncSeries<Rational>::poly({Rational(1), Rational(-1)}, 5);  // 1 - x
  auto inv = s.reciprocal();
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(inv[i], Rational(1));
  EXPECT_EQ(s * inv, TruncSeries<Rational>::constant(Rational(1), 5));
  EXPECT_THROW(TruncSeries<Rational>::poly({Rational(0), Rational(1)}, 3).reciprocal(), DivisionByZero);
}

TEST(Series, ExpansionOfRationalFunction) {
  ZRatN z = ZRatN::var();
  auto c = series_at_zero(ZRatN(1) / (ZRatN(1) - z), 4);
  ASSERT_EQ(c.size(), 5u);
  for (const auto& x : c) EXPECT_EQ(x, Rational(1));
  auto d = series_at_infinity(z / (z - ZRatN(2)), 3);  // 1 + 2/z + 4/z^2 + ...
  EXPECT_EQ(d[0], Rational(1));
  EXPECT_EQ(d[1], Rational(2));
  EXPECT_EQ(d[2], Rational(4));
}

TEST(Series, MixingDirectionsThrows) {
  auto a = TruncSeries<Rational>::constant(Rational(1), 2, SeriesDir::Ascending);
  auto b = TruncSeries<Rational>::constant(Rational(1), 2, SeriesDir::Descending);
  EXPECT_THROW(a + b, std::invalid_argument);
}

TEST(FSeries, LeadingCoefficientIsOne) {
  auto f = solve_f_series(2, 1, 0);
  EXPECT_EQ(f[0], QRat(1));
}

TEST(FSeries, FirstCoefficientByHand) {
  // For (2,1) the multiplier is identically 1, so f = 1.
  EXPECT_EQ(solve_f_series(2, 1, 1)[1], QRat(0));
  // For (1,2), comparing x^1 on both sides gives f_1 (q^2 - 1) = 1 + q^2 - q^-2 - q^4.
  EXPECT_EQ(solve_f_series(1, 2, 1)[1], q_pow(-2) - q_pow(2));
}

TEST(FSeries, FunctionalEquationResidualVanishes) {
  for (auto [M, N] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{3, 1}}) {
    for (int K : {3, 8}) {
      auto f = solve_f_series(M, N, K);
      auto lhs = f.subs_scale(q_pow(2 * N - 2 * M));
      auto rhs = f * f_multiplier(M, N, K);
      EXPECT_TRUE((lhs - rhs).is_zero_series()) << M << "," << N << " K=" << K;
    }
  }
}

TEST(FSeries, EqualDimensionsHaveNoSolution) {
  EXPECT_THROW(solve_f_series(1, 1, 2), NoSolution);
  EXPECT_THROW(solve_f_series(2, 2, 1), NoSolution);
}

TEST(Render, CanonicalText) {
  MPoly q = MPoly::var("q");
  EXPECT_EQ((q * q - MPoly::var("q", -2)).str(), "q^2 - q^-2");
  EXPECT_EQ(render(Rational(-3, 4)), "-3/4");
  ZRatN z = ZRatN::var();
  EXPECT_EQ(render((z - ZRatN(1)) / (ZRatN(2) * z)), render((ZRatN(2) * z - ZRatN(2)) / (ZRatN(4) * z)));
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-5"), Rational(-5));
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(Rng, DeterministicPerKey) {
  Rng a(5, "k"), b(5, "k"), c(5, "other");
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.rational(), b.rational());
  bool differs = false;
  Rng a2(5, "k");
  for (int i = 0; i < 10; ++i) differs = differs || a2.rational() != c.rational();
  EXPECT_TRUE(differs);
  Rng d(9, "range");
  for (int i = 0; i < 200; ++i) {
    Rational x = d.rational();
    EXPECT_NE(x, 0);
    EXPECT_LE(abs(x.get_num()), 97);
    EXPECT_LE(x.get_den(), 97);
  }
}

}  // namespace
}  // namespace sberez

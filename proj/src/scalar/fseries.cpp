// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/scalar/series.hpp"

namespace sberez {

QRat q_pow(int k) { return QRat::var_pow(k); }

QRat q_int(int n) { return (q_pow(n) - q_pow(-n)) / (q_pow(1) - q_pow(-1)); }

QRat q_factorial(int m) {
  QRat r(1);
  for (int i = 1; i <= m; ++i) r *= q_int(i);
  return r;
}

TruncSeries<QRat> f_multiplier(int M, int N, int K) {
  QRat s = q_pow(2 * N - 2 * M);
  auto lin = [&](const QRat& a) { return TruncSeries<QRat>::poly({QRat(1), -a}, K); };
  TruncSeries<QRat> num = lin(q_pow(-2)) * lin(s * q_pow(2));
  TruncSeries<QRat> den = lin(QRat(1)) * lin(s);
  return num * den.reciprocal();
}

TruncSeries<QRat> solve_f_series(int M, int N, int K) {
  if (K < 0) throw std::invalid_argument("negative order");
  if (M == N) throw NoSolution("f series: no solution for M = N (shift q^(2N-2M) = 1)");
  TruncSeries<QRat> h = f_multiplier(M, N, K);
  QRat s = q_pow(2 * N - 2 * M);
  TruncSeries<QRat> f(K);
  f[0] = QRat(1);
  // Order k: f_k (s^k - 1) = sum_{i<k} f_i h_{k-i}, using h_0 = 1.
  QRat sk(1);
  for (int k = 1; k <= K; ++k) {
    sk *= s;
    QRat rhs(0);
    for (int i = 0; i < k; ++i) rhs += f[i] * h[k - i];
    f[k] = rhs / (sk - QRat(1));
  }
  TruncSeries<QRat> resid = f.subs_scale(s) - f * h;
  if (!resid.is_zero_series()) throw NoSolution("f series: residual check failed");
  return f;
}

}  // namespace sberez

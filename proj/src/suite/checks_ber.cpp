// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>

#include "sberez/suite/checks.hpp"
#include "util.hpp"

namespace sberez {

namespace {

// Full fusion form only while W x aux^{M+N} stays this small.
constexpr long kFullFusionLimit = 256;
// Dense operators on W x aux^max(M,N) beyond this size are not attempted.
constexpr long kFactorizedFusionLimit = 1024;

template <class F>
Mat<F> diag_product(const GradedDim& dim, const OpMatrix<F>& X) {
  Mat<F> p = Mat<F>::identity(X.dW());
  for (int i = 0; i < dim.n(); ++i) p = p * (i < dim.M ? X.at(i, i) : X.at(i, i).inverse());
  return p;
}

template <class F>
F str_scalar(const GradedDim& dim, const std::vector<F>& d) {
  F s(0);
  for (int i = 0; i < dim.n(); ++i) s = dim.parity(i) ? F(s - d[i]) : F(s + d[i]);
  return s;
}

template <class F>
GradedOp<F> w_scalar_op(const RepDesc& rep, const Mat<F>& c, int total) {
  std::vector<int> pos(rep.factors());
  std::iota(pos.begin(), pos.end(), 0);
  return embed(GradedOp<F>(rep.dim, rep.factors(), c), pos, total);
}

// Series coefficients of a central candidate X(z) at infinity and at 0,
// tested against L(w) at random regular points.
void series_centrality(CheckReport& r, const std::string& what, const Mat<ZRatN>& X, const RepDesc& rep,
                       const Rational& q, Rng& rng, int points, int ncoeffs) {
  std::vector<std::pair<Rational, OpMatrix<Rational>>> Ls;
  for (int p = 0; p < points; ++p) {
    Rational w;
    auto L = random_regular_L(rep, q, rng, &w);
    Ls.emplace_back(w, L);
  }
  for (bool inf : {true, false}) {
    auto cs = mat_series(X, inf, ncoeffs - 1);
    for (int k = 0; k < ncoeffs; ++k)
      for (const auto& [w, L] : Ls) {
        json wit = commutator_witness(cs[k], L);
        r.expect(what + (inf ? "^+" : "^-") + " coefficient " + std::to_string(k) + " commutes with L(w) at w=" +
                     w.get_str(),
                 wit.is_null(), wit);
      }
  }
}

}  // namespace

CheckReport check_ber_double(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "berezinian.double." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  long total = static_cast<long>(rep.w_dim()) * ipow(dim.n(), dim.n());
  bool full = total <= kFullFusionLimit;
  long factorized = static_cast<long>(rep.w_dim()) * ipow(dim.n(), std::max(dim.M, dim.N));
  if (factorized > kFactorizedFusionLimit) {
    r.skip("fusion operator of size " + std::to_string(factorized) + " exceeds " +
           std::to_string(kFactorizedFusionLimit));
    return r;
  }
  r.data["fusion_form"] = full ? "full and factorized" : "factorized";
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    auto L = rep_lfun(rep, qf);
    Mat<F> sum = ber_sum(dim, L, z, qf);
    Mat<F> fac = ber_fusion_factorized(rep, z, qf);
    if (full) expect_mat(r, "full and factorized fusion forms agree at " + tag, ber_fusion_full(rep, z, qf), fac);
    expect_mat(r, "fusion form = permutation-sum form at " + tag, fac, sum);
    note_mat(r, "fusion form = (-1)^N permutation-sum form at " + tag, fac, sum.scaled(F(dim.N % 2 ? -1 : 1)));
  });
  return r;
}

CheckReport check_centrality(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points, int ncoeffs) {
  CheckReport r;
  r.name = "berezinian.centrality." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  r.params["coefficients"] = ncoeffs;
  const GradedDim& dim = rep.dim;
  ZRatN zs = ZRatN::var();
  auto Lser = rep_L(rep, zs, ZRatN(q));
  OpMatrix<Rational> Lp0 = opmat_series(Lser, true, 0)[0], Lm0 = opmat_series(Lser, false, 0)[0];

  if (mode == Mode::Symbolic) {
    Mat<ZRatN> B = ber_sum(dim, rep_lfun(rep, ZRatN(q)), zs, ZRatN(q));
    series_centrality(r, "b", B, rep, q, rng, points, ncoeffs);
    expect_mat(r, "b^+_0 = product of leading diagonal coefficients", mat_series(B, true, 0)[0],
               diag_product(dim, Lp0));
    expect_mat(r, "b^-_0 = product of leading diagonal coefficients", mat_series(B, false, 0)[0],
               diag_product(dim, Lm0));
    if (rep.factors() == 1) r.expect("B(z) acts by a scalar on the evaluation module", is_scalar_matrix(B));
  } else {
    over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
      if constexpr (std::is_same_v<decltype(z), Rational>) {
        Mat<Rational> B = ber_sum(dim, rep_lfun(rep, q), z, q);
        for (int p = 0; p < points; ++p) {
          Rational w;
          auto L = random_regular_L(rep, q, rng, &w);
          json wit = commutator_witness(B, L);
          r.expect("B(" + tag + ") commutes with L(w) at w=" + w.get_str(), wit.is_null(), wit);
        }
        if (rep.factors() == 1) r.expect("B(z) acts by a scalar at " + tag, is_scalar_matrix(B));
      }
    });
    // The leading coefficient is the Berezinian of the limit L(infinity).
    Rational one(1);
    LFun<Rational> cp = [&](const Rational&) { return Lp0; };
    LFun<Rational> cm = [&](const Rational&) { return Lm0; };
    expect_mat(r, "b^+_0 = product of leading diagonal coefficients", ber_sum(dim, cp, one, q),
               diag_product(dim, Lp0));
    expect_mat(r, "b^-_0 = product of leading diagonal coefficients", ber_sum(dim, cm, one, q),
               diag_product(dim, Lm0));
  }
  return r;
}

CheckReport check_zeta(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "zeta." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  int nf = rep.factors(), tot = nf + 2;
  json traces = json::object();
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    auto L = rep_lfun(rep, qf);
    auto d = D_diag(dim, qf, false), dt = D_diag(dim, qf, true);
    F s = power(qf, 2 * dim.N - 2 * dim.M);
    OpMatrix<F> Ls = L(z * s), Li = L(z).inverse();

    // As stated, with D.
    auto X = lltr_lhs(dim, L, z, qf, d);
    Mat<F> zl = extract_scalar(X, d);
    r.expect("L(zs)^st D (L(z)^-1)^st = zeta D at " + tag, is_scalar_times(X, zl, d));
    auto Y = secllrt_lhs(dim, L, z, qf, d);
    r.expect("(L(z)^-1)^st D^-1 L(zs)^st = zeta D^-1 at " + tag, is_scalar_times(Y, zl, dt));
    // With D^-1 in place of D.
    auto Xc = lltr_lhs(dim, L, z, qf, dt);
    Mat<F> zc = extract_scalar(Xc, dt);
    r.note("L(zs)^st D^-1 (L(z)^-1)^st = zeta D^-1 at " + tag, is_scalar_times(Xc, zc, dt));
    auto Yc = secllrt_lhs(dim, L, z, qf, dt);
    r.note("(L(z)^-1)^st D L(zs)^st = zeta D at " + tag, is_scalar_times(Yc, zc, d));
    if (nf == 1) r.expect("zeta acts by a scalar on the evaluation module at " + tag, is_scalar_matrix(zc));

    // Trace formulas; the normalizations are str D and str D^-1.
    if (dim.M != dim.N) {
      auto Dm = diag_op(Ls, d), Dt = diag_op(Ls, dt);
      F sD = str_scalar(dim, d), sDt = str_scalar(dim, dt);
      Mat<F> t1 = tr_aux(Dm * Ls * Li).scaled(F(1) / sD);
      Mat<F> t2 = tr_aux(Dt * Li * Ls).scaled(F(1) / sDt);
      expect_mat(r, "zeta = tr(D L(zs) L(z)^-1) / str D at " + tag, t1, zl);
      expect_mat(r, "zeta = tr(D^-1 L(z)^-1 L(zs)) / str D^-1 at " + tag, t2, zl);
      note_mat(r, "zeta = str(D^-1 L(zs) L(z)^-1) / str D^-1 at " + tag, Mat<F>(str_aux(Dt * Ls * Li).scaled(F(1) / sDt)),
               zc);
      note_mat(r, "zeta = str(D L(z)^-1 L(zs)) / str D at " + tag, Mat<F>(str_aux(Dm * Li * Ls).scaled(F(1) / sD)), zc);
    }

    // Entrywise forms, column by column.
    std::vector<F> w1(dim.n()), w2(dim.n());
    for (int i = 0; i < dim.n(); ++i) {
      w1[i] = i < dim.M ? power(qf, 2 * i) : F(-power(qf, 4 * dim.M - 2 * (i + 1)));
      w2[i] = i < dim.M ? power(qf, -2 * i) : power(qf, 2 - 4 * dim.M);
    }
    for (int j = 0; j < dim.n(); ++j) {
      std::string col = " (column " + std::to_string(j + 1) + ") at " + tag;
      expect_mat(r, "entrywise zeta, first form" + col, zeta_entry_sum(Ls, Li, j, w1, false), zl);
      expect_mat(r, "entrywise zeta, second form" + col, zeta_entry_sum(Ls, Li, j, w2, true), zl);
      std::vector<F> c1(dim.n()), c2(dim.n());
      for (int i = 0; i < dim.n(); ++i) {
        c1[i] = dt[i] / dt[j];
        c2[i] = dt[j] / dt[i];
      }
      note_mat(r, "entrywise zeta with D^-1 weights, first form" + col, zeta_entry_sum(Ls, Li, j, c1, false), zc);
      note_mat(r, "entrywise zeta with D^-1 weights, second form" + col, zeta_entry_sum(Ls, Li, j, c2, true), zc);
    }

    // Q D_2 L_1(zs) (L_2(z)^-1)^st D_2^-1 = D_2 (L_2(z)^-1)^st L_1(zs) D_2^-1 Q = Q zeta.
    auto L1 = place_aux(rep_op(rep, F(z * s), qf), nf, 0, tot);
    auto L2 = supertranspose(place_aux(rep_op(rep, z, qf).inverse(), nf, 1, tot), nf + 1);
    auto Q = place_on_aux(build_Q<F>(dim), nf, {0, 1}, tot);
    for (bool inv : {false, true}) {
      auto D2 = place_on_aux(build_D(dim, qf, inv), nf, {1}, tot);
      auto D2i = place_on_aux(build_D(dim, qf, !inv), nf, {1}, tot);
      auto A = Q * D2 * L1 * L2 * D2i, B = D2 * L2 * L1 * D2i * Q;
      auto C = Q * w_scalar_op(rep, inv ? zc : zl, tot);
      std::string which = inv ? " with D^-1" : " with D";
      if (inv) {
        note_op(r, "Q L1 L2 identity, both sides agree" + which + " at " + tag, A, B);
        note_op(r, "Q L1 L2 identity equals Q zeta" + which + " at " + tag, A, C);
      } else {
        expect_op(r, "Q L1 L2 identity, both sides agree" + which + " at " + tag, A, B);
        expect_op(r, "Q L1 L2 identity equals Q zeta" + which + " at " + tag, A, C);
      }
    }

    // Centrality of the scalar read with D^-1.
    if constexpr (std::is_same_v<F, ZRatN>) {
      series_centrality(r, "zeta", zc, rep, q, rng, points, 4);
    } else {
      Rational w;
      auto Lw = random_regular_L(rep, q, rng, &w);
      json wit = commutator_witness(zc, Lw);
      r.expect("zeta(" + tag + ") commutes with L(w) at w=" + w.get_str(), wit.is_null(), wit);
    }
  });
  return r;
}

CheckReport check_liouville(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "liouville." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    auto L = rep_lfun(rep, qf);
    Mat<F> lhs = ber_sum(dim, L, F(z * power(qf, -2)), qf);
    F y = z * power(qf, 2 * dim.M - 2 * dim.N - 2);
    Mat<F> B = ber_sum(dim, L, z, qf);
    expect_mat(r, "B(zq^-2) = zeta(zq^{2M-2N-2}) B(z) at " + tag, lhs, Mat<F>(zeta_value(dim, L, y, qf) * B));
    auto dl = D_diag(dim, qf, false);
    note_mat(r, "same with the scalar read against D at " + tag, lhs,
             Mat<F>(extract_scalar(lltr_lhs(dim, L, y, qf, dl), dl) * B));

    if (dim.M > 0 && dim.N > 0) {
      OpMatrix<F> Lz = L(z), Lwi;
      Rational w;
      for (int attempt = 0;; ++attempt) {
        w = rng.rational();
        try {
          Lwi = L(F(w)).inverse();
          break;
        } catch (const SingularMatrix&) {
        } catch (const DivisionByZero&) {
        }
        if (attempt > 20) throw std::runtime_error("no regular evaluation point found");
      }
      bool ok = true;
      json wit;
      for (int a = 0; a < dim.M && ok; ++a)
        for (int b = 0; b < dim.M && ok; ++b)
          for (int c = dim.M; c < dim.n() && ok; ++c)
            for (int d = dim.M; d < dim.n() && ok; ++d)
              if (Lz.at(a, b) * Lwi.at(c, d) != Lwi.at(c, d) * Lz.at(a, b)) {
                ok = false;
                wit = json{{"even", {a + 1, b + 1}}, {"odd", {c + 1, d + 1}}};
              }
      r.expect("[l_ab(z), (L(w)^-1)_cd] = 0 for a,b <= M < c,d at " + tag + ", w=" + w.get_str(), ok, wit);
    }
  });
  return r;
}

}  // namespace sberez

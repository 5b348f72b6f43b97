// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/berezinian/berezinian.hpp"
#include "sberez/scalar/mpoly.hpp"
#include "sberez/scalar/series.hpp"
#include "sberez/suite/checks.hpp"
#include "util.hpp"

namespace sberez {

CheckReport check_qybe(const GradedDim& dim) {
  CheckReport r;
  r.name = "rmatrix.qybe";
  r.params = dim_params(dim);
  MPoly z1 = MPoly::var("z1"), z2 = MPoly::var("z2"), z3 = MPoly::var("z3"), q = MPoly::var("q");
  json holds = json::object();
  json witness = json::object();
  for (Composition c : {Composition::Koszul, Composition::Plain}) {
    CompositionScope scope(c);
    auto R12 = embed(build_R(dim, z1, z2, q), {0, 1}, 3);
    auto R13 = embed(build_R(dim, z1, z3, q), {0, 2}, 3);
    auto R23 = embed(build_R(dim, z2, z3, q), {1, 2}, 3);
    auto lhs = R12 * R13 * R23, rhs = R23 * R13 * R12;
    holds[conv_name(c)] = lhs == rhs;
    witness[conv_name(c)] = op_witness(lhs, rhs);
  }
  Composition def = composition();
  Composition other = def == Composition::Koszul ? Composition::Plain : Composition::Koszul;
  r.data["holds"] = holds;
  r.data["default_convention"] = conv_name(def);
  r.expect("yang-baxter holds under the default " + conv_name(def) + " convention", holds[conv_name(def)].get<bool>(),
           witness[conv_name(def)]);
  r.note("yang-baxter under the " + conv_name(other) + " convention", holds[conv_name(other)].get<bool>(),
         witness[conv_name(other)]);
  return r;
}

CheckReport check_unitarity_qflip(const GradedDim& dim) {
  CheckReport r;
  r.name = "rmatrix.unitarity";
  r.params = dim_params(dim);
  {
    ZRat x = ZRat::var(), q = ZRat(QRat::var());
    auto R12 = build_Rbar(dim, x, q);
    auto R21 = flip21(build_Rbar(dim, ZRat(1) / x, q));
    expect_op(r, "Rbar12(z/w) Rbar21(w/z) = 1", R12 * R21, GradedOp<ZRat>::identity(dim, 2));
  }
  // Rbar21(w/z) = P R(w,z) P / (wq - z/q) against R_v(z,w) / (z qv - w/qv)
  // with qv = q^-1, compared after clearing denominators.
  MPoly z = MPoly::var("z"), w = MPoly::var("w"), q = MPoly::var("q");
  MPoly qi = MPoly::var("q", -1);
  auto P = perm_P<MPoly>(dim);
  auto lhs = (P * build_R(dim, w, z, q) * P).scaled(z * qi - w * q);
  int passing = 0;
  json interp = json::object();
  for (auto [v, name] : {std::pair{QVariant::Coefficients, "coefficients"}, std::pair{QVariant::GradingSwap, "grading_swap"}}) {
    auto rhs = build_R(dim, z, w, q, v).scaled(w * q - z * qi);
    bool ok = lhs == rhs;
    interp[name] = ok;
    passing += ok;
    r.note(std::string("q-flip read as q -> q^-1 in ") + (v == QVariant::Coefficients ? "the coefficients only" : "coefficients and grading"),
           ok, ok ? json(nullptr) : op_witness(lhs, rhs));
  }
  r.data["qflip"] = interp;
  r.expect("exactly one q-flip reading holds", passing == 1, json{{"passing", passing}});
  return r;
}

CheckReport check_crossing(const GradedDim& dim, int K) {
  CheckReport r;
  r.name = "rmatrix.crossing";
  r.params = dim_params(dim);
  r.params["order"] = K;
  ZRat x = ZRat::var(), q = ZRat(QRat::var());
  ZRat s = power(q, 2 * dim.N - 2 * dim.M);
  auto Rb = build_Rbar(dim, x, q), Rbs = build_Rbar(dim, x * s, q);
  auto Rinv = Rb.inverse();
  bool normalized = dim.M != dim.N;
  TruncSeries<QRat> ratio(K);
  if (normalized) {
    auto f = solve_f_series(dim.M, dim.N, K);
    ratio = f.subs_scale(q_pow(2 * dim.N - 2 * dim.M)) * f.reciprocal();
  } else {
    r.data["normalized"] = "skipped: f undefined for M=N";
  }
  auto g_relation = [&](const ZRat& g) {
    ZRat one(1);
    return g * (one - x * power(q, -2)) * (one - x * s * power(q, 2)) == (one - x) * (one - x * s);
  };
  for (bool inv : {false, true}) {
    std::string dn = inv ? "D^-1" : "D";
    auto D = build_D(dim, q, inv);
    auto D1 = embed(D, {0}, 2), D2 = embed(D, {1}, 2);
    auto X2 = supertranspose(Rinv, 1) * D2 * supertranspose(Rbs, 1);
    auto X1 = supertranspose(Rbs, 0) * D1 * supertranspose(Rinv, 0);
    ZRat g2 = X2.mat(0, 0) / D2.mat(0, 0), g1 = X1.mat(0, 0) / D1.mat(0, 0);
    struct Item {
      std::string label;
      bool ok;
      json w;
    };
    std::vector<Item> items;
    bool s2 = X2 == D2.scaled(g2), s1 = X1 == D1.scaled(g1);
    items.push_back({"(Rbar(x)^-1)^st2 " + dn + "_2 Rbar(xs)^st2 = g(x) " + dn + "_2", s2,
                     s2 ? json(nullptr) : op_witness(X2, D2.scaled(g2))});
    items.push_back({"Rbar(xs)^st1 " + dn + "_1 (Rbar(x)^-1)^st1 = g(x) " + dn + "_1", s1,
                     s1 ? json(nullptr) : op_witness(X1, D1.scaled(g1))});
    bool gr = g_relation(g2) && g_relation(g1);
    items.push_back({"crossing scalar g satisfies the f functional relation (" + dn + ")", gr,
                     gr ? json(nullptr) : json{{"g", render(g2)}}});
    if (s2 && s1) r.data[inv ? "g_inverse_D" : "g"] = render(g2);
    if (normalized) {
      // R = f Rbar turns the left sides into X * f(xs)/f(x); compare with D
      // through order K.
      for (auto [X, Dk, leg] : {std::tuple{&X2, &D2, 2}, std::tuple{&X1, &D1, 1}}) {
        bool ok = true;
        json w = nullptr;
        for (int i = 0; i < X->size() && ok; ++i)
          for (int j = 0; j < X->size() && ok; ++j) {
            TruncSeries<QRat> e(series_at_zero(X->mat(i, j), K), SeriesDir::Ascending);
            TruncSeries<QRat> target = TruncSeries<QRat>::constant(series_at_zero(Dk->mat(i, j), 0)[0], K);
            TruncSeries<QRat> diff = e * ratio - target;
            for (int t = 0; t <= K && ok; ++t)
              if (!is_zero(diff[t])) {
                ok = false;
                w = json{{"entry", {i, j}}, {"order", t}, {"residual", render(diff[t])}};
              }
          }
        items.push_back({"normalized crossing on leg " + std::to_string(leg) + " with " + dn + " through order " +
                             std::to_string(K),
                         ok, w});
      }
    }
    for (auto& it : items) {
      if (inv)
        r.note(it.label, it.ok, it.w);
      else
        r.expect(it.label, it.ok, it.w);
    }
  }
  return r;
}

CheckReport check_hecke(const GradedDim& dim) {
  CheckReport r;
  r.name = "rmatrix.hecke";
  r.params = dim_params(dim);
  MPoly q = MPoly::var("q"), qi = MPoly::var("q", -1), z = MPoly::var("z"), w = MPoly::var("w");
  auto Rc = build_R_const(dim, q), Rp = build_R_prime(dim, q);
  auto P = perm_P<MPoly>(dim);
  expect_op(r, "P^2 = 1", P * P, GradedOp<MPoly>::identity(dim, 2));
  expect_op(r, "R(z,w) = z R - w R'", build_R(dim, z, w, q), Rc.scaled(z) - Rp.scaled(w));
  expect_op(r, "R - R' = (q - q^-1) P", Rc - Rp, P.scaled(q - qi));
  {
    QRat qq = QRat::var();
    auto Rq = build_R_const(dim, qq);
    auto Pq = perm_P<QRat>(dim);
    expect_op(r, "R' = P R^-1 P", Pq * Rq.inverse() * Pq, build_R_prime(dim, qq));
  }
  auto I2 = GradedOp<MPoly>::identity(dim, 2);
  auto T = hecke_T(dim, q, 0, 2);
  expect_op(r, "(T - q)(T + q^-1) = 0", (T - I2.scaled(q)) * (T + I2.scaled(qi)), GradedOp<MPoly>(dim, 2));
  auto T0 = hecke_T(dim, q, 0, 3), T1 = hecke_T(dim, q, 1, 3);
  expect_op(r, "T1 T2 T1 = T2 T1 T2", T0 * T1 * T0, T1 * T0 * T1);
  return r;
}

CheckReport check_symmetrizers(const GradedDim& dim, int mcap) {
  CheckReport r;
  r.name = "rmatrix.symmetrizers";
  r.params = dim_params(dim);
  r.params["mcap"] = mcap;
  MPoly q = MPoly::var("q");
  for (bool inverted : {false, true}) {
    MPoly qb = inverted ? MPoly::var("q", -1) : q;
    std::string base = inverted ? " (base q^-1)" : "";
    for (int m = 1; m <= mcap; ++m) {
      for (bool anti : {true, false}) {
        std::string nm = std::string(anti ? "A" : "S") + std::to_string(m);
        auto G = symmetrizer_group(dim, qb, m, anti, 0, m);
        auto Rr = symmetrizer_rec(dim, qb, m, anti, 0, m);
        r.expect(nm + " recursion = group sum" + base, Rr.same_as(G));
        r.expect(nm + " idempotent" + base, Rr.idempotent());
        auto Id = GradedOp<MPoly>::identity(dim, m);
        bool eig = true;
        for (int k = 0; k + 1 < m; ++k) {
          auto Tk = hecke_T(dim, qb, k, m);
          auto shift = anti ? Tk + Id.scaled(MPoly(1) / qb) : Tk - Id.scaled(qb);
          eig = eig && (Rr.op * shift).is_zero_op();
        }
        r.expect(nm + (anti ? " (T_k + q^-1) = 0" : " (T_k - q) = 0") + base, eig);
      }
    }
  }
  if (mcap >= 3) {
    auto a = hecke_T_sigma(dim, q, {0, 1, 0}, 0, 3), b = hecke_T_sigma(dim, q, {1, 0, 1}, 0, 3);
    expect_op(r, "T of the longest element is independent of the reduced word", a, b);
  }
  return r;
}

CheckReport check_fusion(const RepDesc& rep, const Rational& q, int m, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "rmatrix.fusion";
  r.params = rep_params(rep, q);
  r.params["copies"] = m;
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    int total = rep.factors() + m;
    auto A = symmetrizer_rec(rep.dim, qf, m, true, rep.factors(), total).value();
    auto lhs = A * fused_product(rep, z, qf, m, false);
    auto rhs = fused_product(rep, z, qf, m, true) * A;
    expect_op(r, "A_m L_1(z) ... L_m(zq^{2m-2}) = L_1(zq^{2m-2}) ... L_m(z) A_m at " + tag, lhs, rhs);
  });
  return r;
}

}  // namespace sberez

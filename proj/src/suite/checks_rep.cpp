// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "sberez/rtt/abstract.hpp"
#include "sberez/scalar/mpoly.hpp"
#include "sberez/suite/checks.hpp"
#include "util.hpp"

namespace sberez {

namespace {

// L(z) with the opposite leg assignment: the first factor of R on W and
// the second on the auxiliary space.
GradedOp<ZRatN> swapped_legs_op(const RepDesc& rep, const ZRatN& z, const ZRatN& q) {
  int r = rep.factors();
  auto out = GradedOp<ZRatN>::identity(rep.dim, r + 1);
  for (int k = 0; k < r; ++k) {
    ZRatN a(rep.a[k]);
    auto R = build_R(rep.dim, z, a, q).scaled(ZRatN(1) / (z * q - a / q));
    out = out * embed(R, {k, r}, r + 1);
  }
  return out;
}

// Whether the order-0 coefficient is upper (upper = true) or lower
// triangular; returns the first offending entry (1-based) or null.
json triangular_witness(const OpMatrix<Rational>& X, bool upper) {
  for (int a = 0; a < X.size(); ++a)
    for (int b = 0; b < X.size(); ++b)
      if ((upper ? a > b : a < b) && !X.at(a, b).is_zero_matrix()) return json{{"entry", {a + 1, b + 1}}};
  return nullptr;
}

}  // namespace

CheckReport check_rep_relations(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "relations.rep." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  int nf = rep.factors();

  if (mode == Mode::Symbolic) {
    // Undressed numerators with symbolic z, w, q and evaluation
    // parameters; scalar factors drop out of both relations.
    std::vector<MPoly> as;
    for (int k = 0; k < nf; ++k) as.push_back(MPoly::var(nf == 1 ? "a" : "a" + std::to_string(k + 1)));
    MPoly z = MPoly::var("z"), w = MPoly::var("w"), qs = MPoly::var("q");
    auto Lz = rep_op_poly(dim, as, z, qs), Lw = rep_op_poly(dim, as, w, qs);
    int bad = 0;
    auto first = rll2_failure(dim, aux_blocks(Lz), aux_blocks(Lw), z, w, qs, &bad);
    r.expect("component relations in z, w, q, a (symbolic)", first.empty(),
             first.empty() ? json(nullptr) : json{{"component", first}, {"failing", bad}});
    auto res = rll_matrix_residual(Lz, Lw, build_R(dim, z, w, qs), nf);
    r.expect("R(z,w) L1(z) L2(w) = L2(w) L1(z) R(z,w) (symbolic)", res.mat.is_zero_matrix(),
             res.mat.is_zero_matrix() ? json(nullptr) : op_witness(res, GradedOp<MPoly>(dim, res.legs)));
  } else {
    for (int p = 0; p < points; ++p) {
      for (int attempt = 0;; ++attempt) {
        Rational z = rng.rational(), w = rng.rational();
        if (z == w) continue;
        try {
          auto Lz = rep_op(rep, z, q), Lw = rep_op(rep, w, q);
          std::string tag = "z=" + z.get_str() + ", w=" + w.get_str();
          int bad = 0;
          auto first = rll2_failure(dim, aux_blocks(Lz), aux_blocks(Lw), z, w, q, &bad);
          r.expect("component relations at " + tag, first.empty(),
                   first.empty() ? json(nullptr) : json{{"component", first}, {"failing", bad}});
          auto res = rll_matrix_residual(Lz, Lw, build_R(dim, z, w, q), nf);
          r.expect("R(z,w) L1(z) L2(w) = L2(w) L1(z) R(z,w) at " + tag, res.mat.is_zero_matrix());
          break;
        } catch (const DivisionByZero&) {
        }
        if (attempt > 20) throw std::runtime_error("no regular evaluation point found");
      }
    }
  }

  // Triangularity of the leading coefficients and the inverse diagonals.
  ZRatN z = ZRatN::var(), qf(q);
  auto L = rep_L(rep, z, qf);
  auto Lp = opmat_series(L, true, 0)[0], Lm = opmat_series(L, false, 0)[0];
  json wp = triangular_witness(Lp, true), wm = triangular_witness(Lm, false);
  r.expect("L(infinity) is upper triangular", wp.is_null(), wp);
  r.expect("L(0) is lower triangular", wm.is_null(), wm);
  bool diag_ok = true;
  json diag_w;
  for (int i = 0; i < dim.n(); ++i)
    if (!(Lp.at(i, i) * Lm.at(i, i)).is_identity()) {
      diag_ok = false;
      diag_w = json{{"index", i + 1}};
      break;
    }
  r.expect("l_ii(infinity) l_ii(0) = 1", diag_ok, diag_w);

  auto Ls = aux_blocks(swapped_legs_op(rep, z, qf));
  auto Sp = opmat_series(Ls, true, 0)[0], Sm = opmat_series(Ls, false, 0)[0];
  bool swapped_ok = triangular_witness(Sp, true).is_null() && triangular_witness(Sm, false).is_null();
  r.note("opposite leg assignment gives the same triangularity", swapped_ok);
  r.data["aux_leg"] = "first factor of R";
  r.data["opposite_assignment_triangular"] = swapped_ok;
  return r;
}

CheckReport check_master_relations(const RepDesc& rep, const Rational& q, int K) {
  CheckReport r;
  r.name = "relations.master." + rep.type();
  r.params = rep_params(rep, q);
  r.params["order"] = K;
  const GradedDim& dim = rep.dim;
  ZRatN z = ZRatN::var(), qf(q);
  auto L = rep_L(rep, z, qf);
  auto plus = opmat_series(L, true, K), minus = opmat_series(L, false, K);
  std::map<GenIndex, Mat<Rational>> inv_cache;
  auto gen = [&](const GenIndex& g) -> Mat<Rational> {
    const auto& S = g.sign > 0 ? plus : minus;
    if (!g.inv) return S.at(g.r).at(g.i, g.j);
    auto it = inv_cache.find(g);
    if (it == inv_cache.end()) it = inv_cache.emplace(g, S.at(g.r).at(g.i, g.j).inverse()).first;
    return it->second;
  };
  json counts = json::object();
  for (RelKind kind : {RelKind::PlusPlus, RelKind::MinusMinus, RelKind::Crossed}) {
    auto rels = expand_rll(dim, kind, K);
    int bad = 0;
    json first;
    for (const auto& rel : rels) {
      if (instantiate(rel.poly, gen, q, rep.w_dim()).is_zero_matrix()) continue;
      if (bad++ == 0)
        first = json{{"component", {rel.a + 1, rel.b + 1, rel.c + 1, rel.d + 1}}, {"orders", {rel.mz, rel.mw}}};
    }
    counts[rel_kind_name(kind)] = {{"relations", rels.size()}, {"failing", bad}};
    r.expect(rel_kind_name(kind) + " relations through order " + std::to_string(K), bad == 0, first);
  }
  r.data["relations"] = counts;
  return r;
}

}  // namespace sberez

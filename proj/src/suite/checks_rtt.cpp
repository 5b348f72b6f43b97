// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/rtt/abstract.hpp"
#include "sberez/suite/checks.hpp"
#include "util.hpp"

namespace sberez {

namespace {

json first_term(const NCPoly& p) {
  if (p.zero()) return nullptr;
  const auto& [w, c] = *p.terms().begin();
  std::string word;
  for (const auto& g : w) word += (word.empty() ? "" : " ") + g.str();
  return json{{"word", word.empty() ? "1" : word}, {"coefficient", c.str()}};
}

// Two regular rational points z != w.
template <class Fn>
void over_zw(CheckReport& r, Rng& rng, int points, Fn body) {
  for (int p = 0; p < points; ++p) {
    for (int attempt = 0;; ++attempt) {
      Rational z = rng.rational(), w = rng.rational();
      size_t mark = r.subs.size();
      if (z != w) {
        try {
          body(z, w, "z=" + z.get_str() + ", w=" + w.get_str());
          break;
        } catch (const SingularMatrix&) {
        } catch (const DivisionByZero&) {
        }
      }
      r.subs.resize(mark);
      if (attempt > 20) throw std::runtime_error("no regular evaluation point found");
    }
  }
}

}  // namespace

CheckReport check_hc_image(const GradedDim& dim, int K) {
  CheckReport r;
  r.name = "hc.image";
  r.params = dim_params(dim);
  r.params["order"] = K;
  json formula = json::object();
  for (int sign : {+1, -1}) {
    NCSeries B = berezinian_abstract(dim, sign, K);
    NCSeries H = hc_formula(dim, sign, K);
    std::string fam = sign > 0 ? "+" : "-";
    for (int k = 0; k <= K; ++k) {
      NCPoly diff = B[k].hc_project() - H[k];
      r.expect("theta(b^" + fam + "_" + std::to_string(k) + ") = diagonal product formula", diff.zero(),
               first_term(diff));
    }
    formula[fam] = H[0].str();
  }
  r.data["b0"] = formula;
  return r;
}

CheckReport check_omega(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "morphisms.omega." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  int nf = rep.factors(), tot = nf + 2;
  // z symbolic (or a point); w always a rational point.
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    Rational wr;
    for (int attempt = 0;; ++attempt) {
      wr = rng.rational();
      if (F(wr) != z) break;
      if (attempt > 20) throw std::runtime_error("no regular evaluation point found");
    }
    F w(wr);
    auto L1 = place_aux(rep_op(rep, z, qf).inverse(), nf, 0, tot);
    auto L2 = place_aux(rep_op(rep, w, qf).inverse(), nf, 1, tot);
    std::string at = " at " + tag + ", w=" + wr.get_str();
    auto R = place_on_aux(build_R(dim, z, w, qf), nf, {0, 1}, tot);
    expect_op(r, "R L2^-1(w) L1^-1(z) = L1^-1(z) L2^-1(w) R" + at, GradedOp<F>(R * L2 * L1), GradedOp<F>(L1 * L2 * R));
    auto Rc = place_on_aux(build_R(dim, z, w, qf, QVariant::Coefficients), nf, {0, 1}, tot);
    expect_op(r, "R_{q^-1} L1^-1(z) L2^-1(w) = L2^-1(w) L1^-1(z) R_{q^-1}, coefficients read at q^-1" + at,
              GradedOp<F>(Rc * L1 * L2), GradedOp<F>(L2 * L1 * Rc));
    auto Rg = place_on_aux(build_R(dim, z, w, qf, QVariant::GradingSwap), nf, {0, 1}, tot);
    note_op(r, "same with R_{q^-1} read as the grading swap" + at, GradedOp<F>(Rg * L1 * L2),
            GradedOp<F>(L2 * L1 * Rg));
  });
  return r;
}

CheckReport check_rho(const RepDesc& rep, const Rational& q, Rng& rng, int points) {
  CheckReport r;
  r.name = "morphisms.rho." + rep.type();
  r.params = rep_params(rep, q);
  GradedDim swapped(rep.dim.N, rep.dim.M);
  over_zw(r, rng, points, [&](const Rational& z, const Rational& w, const std::string& tag) {
    auto Lz = rep_L(rep, Rational(1 / z), q).reversed(), Lw = rep_L(rep, Rational(1 / w), q).reversed();
    int bad = 0;
    auto first = rll2_failure(swapped, Lz, Lw, z, w, q, &bad);
    for (auto& x : first) ++x;
    r.expect("L(1/z) with reversed indices satisfies the relations of the swapped algebra at " + tag, first.empty(),
             first.empty() ? json(nullptr) : json{{"component", first}, {"failing", bad}});
  });
  return r;
}

CheckReport check_psi(const RepDesc& rep, const Rational& q, int k, Rng& rng, int points) {
  CheckReport r;
  r.name = "morphisms.psi.k" + std::to_string(k) + "." + rep.type();
  r.params = rep_params(rep, q);
  r.params["k"] = k;
  const GradedDim& big = rep.dim;
  if (k > big.M) {
    r.skip("k exceeds the number of even indices");
    return r;
  }
  GradedDim small(big.M - k, big.N);
  int n = big.n();
  std::vector<int> head, tail;
  for (int i = 0; i < n; ++i) (i < k ? head : tail).push_back(i);
  auto schur = [&](const Rational& x) { return schur_complement(rep_L(rep, x, q), k); };
  over_zw(r, rng, points, [&](const Rational& z, const Rational& w, const std::string& tag) {
    OpMatrix<Rational> L = rep_L(rep, z, q), S = schur(z);
    // D - C A^-1 B with graded products, using block-supported full matrices.
    OpMatrix<Rational> A(L.par, L.wpar), Bm = A, C = A, D = A;
    OpMatrix<Rational> Ai = L.sub(head).inverse();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool ra = a < k, cb = b < k;
        if (ra && cb) A.at(a, b) = Ai.at(a, b);
        if (ra && !cb) Bm.at(a, b) = L.at(a, b);
        if (!ra && cb) C.at(a, b) = L.at(a, b);
        if (!ra && !cb) D.at(a, b) = L.at(a, b);
      }
    OpMatrix<Rational> explicit_form = (D - C * A * Bm).sub(tail);
    expect_opmat(r, "psi_k(L(z)) = D - C A^-1 B at " + tag, S, explicit_form);

    // Diagonal entries as framed quasideterminants of principal minors.
    bool framed = true;
    for (int i = 0; i < small.n() && framed; ++i) {
      std::vector<int> idx = head;
      idx.push_back(k + i);
      framed = quasidet(L.sub(idx), k, k) == S.at(i, i);
    }
    r.expect("diagonal entries are framed quasideterminants at " + tag, framed);

    if (k == 1) {
      bool plain = true;
      Mat<Rational> a0 = L.at(0, 0).inverse();
      for (int i = 0; i < small.n() && plain; ++i)
        for (int j = 0; j < small.n() && plain; ++j)
          plain = S.at(i, j) == L.at(1 + i, 1 + j) - L.at(1 + i, 0) * a0 * L.at(0, 1 + j);
      r.note("entries equal l_{i+1,j+1} - l_{i+1,1} l_11^-1 l_{1,j+1} as plain products at " + tag, plain);
    }

    int bad = 0;
    auto first = rll2_failure(small, S, schur(w), z, w, q, &bad);
    for (auto& x : first) ++x;
    r.expect("psi_k(L) satisfies the relations of the smaller algebra at " + tag, first.empty(),
             first.empty() ? json(nullptr) : json{{"component", first}, {"failing", bad}});
  });
  return r;
}

}  // namespace sberez

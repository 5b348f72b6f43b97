// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>

#include "sberez/suite/checks.hpp"
#include "util.hpp"

namespace sberez {

namespace {

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

std::string set_name(const std::vector<int>& I) {
  std::string s = "{";
  for (size_t t = 0; t < I.size(); ++t) s += (t ? "," : "") + std::to_string(I[t] + 1);
  return s + "}";
}

template <class F>
Mat<F> product(const std::vector<Mat<F>>& fs, int d) {
  Mat<F> p = Mat<F>::identity(d);
  for (const auto& f : fs) p = p * f;
  return p;
}

}  // namespace

CheckReport check_decomposition(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "minors.decomposition." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  int M = dim.M, N = dim.N;
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    auto L = rep_lfun(rep, qf);
    Mat<F> B = ber_sum(dim, L, z, qf);
    auto fs = decomposition_factors(dim, L, z, qf);
    expect_mat(r, "B(z) = product of quasideterminants at " + tag, product(fs, rep.w_dim()), B);
    bool comm = true;
    json wit;
    for (size_t i = 0; i < fs.size() && comm; ++i)
      for (size_t j = i + 1; j < fs.size() && comm; ++j)
        if (fs[i] * fs[j] != fs[j] * fs[i]) {
          comm = false;
          wit = json{{"factors", {i + 1, j + 1}}};
        }
    r.expect("the factors commute pairwise at " + tag, comm, wit);

    // The even block: det_q of L^{(M)} as a product of quasideterminants.
    if (M > 0) {
      std::vector<Mat<F>> even(fs.begin(), fs.begin() + M);
      expect_mat(r, "det_q L^{(M)}(z) = product of the first M quasideterminants at " + tag,
                 ber_gen(sub_lfun(L, range(0, M)), M, 0, z, qf), product(even, rep.w_dim()));
    }
    // The odd block through the inverse matrix, and the ratio identity
    // relating its quasideterminants to those of L.
    if (N > 0) {
      std::vector<Mat<F>> qd, ratio;
      for (int k = 1; k <= N; ++k) {
        F y = z * power(qf, 2 * M - 2 * k);
        OpMatrix<F> X = L(y).inverse().sub(range(M + k - 1, M + N));
        qd.push_back(quasidet(X, 0, 0));
        ratio.push_back(fs[M + k - 1]);
      }
      // Permutation sum over the odd rows of L^{-1}, as in the second factor of B.
      std::vector<OpMatrix<F>> Iv;
      for (int k = 1; k <= N; ++k) Iv.push_back(L(F(z * power(qf, 2 * M - 2 * k))).inverse());
      Mat<F> odd_sum(rep.w_dim(), rep.w_dim());
      std::vector<int> s(N);
      std::iota(s.begin(), s.end(), 0);
      F mq = F(-1) * qf;
      do {
        Mat<F> t = Iv[0].at(M, M + s[0]);
        for (int k = 1; k < N; ++k) t = t * Iv[k].at(M + k, M + s[k]);
        odd_sum = odd_sum + t.scaled(power(mq, -perm_length(s)));
      } while (std::next_permutation(s.begin(), s.end()));
      expect_mat(r, "odd permutation sum = product of quasideterminants of L^{-1} at " + tag, odd_sum,
                 product(qd, rep.w_dim()));
      for (int k = 0; k < N; ++k)
        expect_mat(r, "ratio identity for quasideterminant " + std::to_string(M + k + 1) + " at " + tag, qd[k],
                   ratio[k]);
    }
  });
  return r;
}

CheckReport check_jacobi(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "minors.jacobi." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  int n = dim.n(), M = dim.M, N = dim.N;
  json literal = json::object(), inverse_form = json::object();
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q), qi = F(1) / qf;
    auto L = rep_lfun(rep, qf);
    Mat<F> B = ber_sum(dim, L, z, qf);
    int d = rep.w_dim();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> I, Ic;
      for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? I : Ic).push_back(i);
      int kev = 0;
      for (int i : I) kev += i < M;
      int kodd = static_cast<int>(I.size()) - kev, nev = M - kev, nodd = N - kodd;
      bool admissible = kodd == 0 || kev == M;
      Mat<F> left = I.empty() ? Mat<F>::identity(d) : ber_gen(sub_lfun(L, I), kev, kodd, z, qf);
      F s = power(qf, 2 * M - 2 * N);
      LFun<F> rev = [&, Ic, s](const F& x) { return L(F(x * s)).inverse().sub(Ic).reversed(); };
      Mat<F> right = Ic.empty() ? Mat<F>::identity(d) : ber_gen(rev, nodd, nev, z, qi);
      std::string lab = (I.empty() ? "corollary, I = {}" : "I = " + set_name(I)) + " at " + tag;
      bool ok = left * right == B;
      if (admissible)
        r.expect("B(z) = B_q(L_I) B_{q^-1}(pi((L(zq^{2M-2N})^-1)_{I^c})), " + lab, ok,
                 ok ? json(nullptr) : mat_witness(Mat<F>(left * right), B));
      else
        r.note("non-admissible subset, " + lab, ok);
      literal[set_name(I)] = ok;

      // The form that holds in the representations: unreversed, shifted
      // by q^{2M-2N-2}, and inverted.
      F s2 = power(qf, 2 * M - 2 * N - 2);
      LFun<F> fwd = [&, Ic, s2](const F& x) { return L(F(x * s2)).inverse().sub(Ic); };
      bool ok2 = false;
      try {
        Mat<F> right2 = Ic.empty() ? Mat<F>::identity(d) : ber_gen(fwd, nev, nodd, z, qi).inverse();
        ok2 = left * right2 == B;
      } catch (const SingularMatrix&) {
      }
      r.note("B(z) = B_q(L_I) B_{q^-1}((L(zq^{2M-2N-2})^-1)_{I^c})^-1, " + lab, ok2);
      inverse_form[set_name(I)] = ok2;
    }
  });
  r.data["literal"] = literal;
  r.data["inverted_unreversed"] = inverse_form;
  return r;
}

CheckReport check_schur(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "minors.schur." + rep.type();
  r.params = rep_params(rep, q);
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  int n = dim.n(), M = dim.M, N = dim.N;
  json shifts = json::object();
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    auto L = rep_lfun(rep, qf);
    Mat<F> B = ber_sum(dim, L, z, qf);
    for (int k = 1; k < n; ++k) {
      int m11 = std::min(k, M), m22 = std::max(M - k, 0);
      Mat<F> left = ber_gen(sub_lfun(L, range(0, k)), m11, k - m11, z, qf);
      auto sch = [&, k](int e) -> LFun<F> {
        F s = power(qf, e);
        return [&, k, s](const F& x) { return schur_complement(L(F(x * s)), k); };
      };
      int e = k < M ? 2 * k : 4 * M - 2 * k;
      Mat<F> right = ber_gen(sch(e), m22, n - k - m22, z, qf);
      bool ok = left * right == B;
      r.expect("B(z) = B_q(L_11) B_q(Schur complement at zq^" + std::to_string(e) + "), k = " + std::to_string(k) +
                   " at " + tag,
               ok, ok ? json(nullptr) : mat_witness(Mat<F>(left * right), B));
      if (!ok) {
        // Shifts under which the factorization holds.
        json good = json::array();
        for (int t = -2 * n; t <= 4 * n; t += 2) {
          if (t == e) continue;
          try {
            if (left * ber_gen(sch(t), m22, n - k - m22, z, qf) == B) good.push_back(t);
          } catch (const SingularMatrix&) {
          }
        }
        shifts[std::to_string(k)] = good;
        r.note("factorization holds for some other shift, k = " + std::to_string(k) + " at " + tag, !good.empty(),
               json{{"exponents", good}});
      }
    }
    if (M > 0 && N > 0) {
      Mat<F> dq = ber_gen(sub_lfun(L, range(0, M)), M, 0, z, qf);
      auto rhs = [&](int e) {
        F s = power(qf, e);
        LFun<F> sch = [&, s](const F& x) { return schur_complement(L(F(x * s)), M); };
        return Mat<F>(dq * ber_gen(sch, N, 0, z, F(F(1) / qf)).inverse());
      };
      bool ok = expect_mat(r, "B(z) = det_q(L_11) det_{q^-1}(Schur complement at zq^{2M})^-1 at " + tag, rhs(2 * M), B);
      if (!ok) {
        json good = json::array();
        for (int t = -2 * n; t <= 4 * n; t += 2) {
          if (t == 2 * M) continue;
          try {
            if (rhs(t) == B) good.push_back(t);
          } catch (const SingularMatrix&) {
          }
        }
        shifts["corollary"] = good;
        r.note("corollary holds for some other shift at " + tag, !good.empty(), json{{"exponents", good}});
      }
    }
  });
  if (!shifts.empty()) r.data["working_shifts"] = shifts;
  return r;
}

CheckReport check_sylvester(int k, const RepDesc& enlarged, const Rational& q, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "sylvester.k" + std::to_string(k) + "." + enlarged.type();
  r.params = rep_params(enlarged, q);
  r.params["k"] = k;
  r.params["mode"] = mode_name(mode);
  int M = enlarged.dim.M - k, N = enlarged.dim.N;
  if (M < 0) {
    r.skip("enlarged algebra must have at least k even indices");
    return r;
  }
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    auto L = rep_lfun(enlarged, qf);
    LFun<F> psi = [&](const F& x) { return schur_complement(L(x), k); };
    Mat<F> lhs = ber_gen(psi, M, N, z, qf);
    F y = z * power(qf, -2 * k);
    Mat<F> dq = ber_gen(sub_lfun(L, range(0, k)), k, 0, y, qf);
    Mat<F> rhs = dq.inverse() * ber_gen(L, k + M, N, y, qf);
    expect_mat(r, "psi_k(B(z)) = det_q(L(zq^-2k)^{1..k})^-1 B(L(zq^-2k)) at " + tag, lhs, rhs);
    Mat<F> dq0 = ber_gen(sub_lfun(L, range(0, k)), k, 0, z, qf);
    note_mat(r, "same without the shift at " + tag, lhs, Mat<F>(dq0.inverse() * ber_gen(L, k + M, N, z, qf)));
  });
  return r;
}

CheckReport check_macmahon(const RepDesc& rep, const Rational& q, int k, Mode mode, Rng& rng, int points) {
  CheckReport r;
  r.name = "macmahon.k" + std::to_string(k) + "." + rep.type();
  r.params = rep_params(rep, q);
  r.params["k"] = k;
  r.params["mode"] = mode_name(mode);
  const GradedDim& dim = rep.dim;
  int nf = rep.factors(), total = nf + k;
  over_z(r, mode, rng, points, [&](auto z, const std::string& tag) {
    using F = std::decay_t<decltype(z)>;
    F qf(q);
    auto P = fused_product(rep, z, qf, k);
    std::vector<int> aux(k);
    std::iota(aux.begin(), aux.end(), nf);
    // Symmetrizer (anti = false) or antisymmetrizer on auxiliary copies
    // [from, from + m), 0-based.
    auto sym = [&](bool anti, int from, int m) { return symmetrizer_rec(dim, qf, m, anti, nf + from, total).value(); };
    auto str_w = [&](const GradedOp<F>& X) { return supertrace(X, aux).mat; };
    Mat<F> zero(rep.w_dim(), rep.w_dim());
    Mat<F> s1 = zero, s2 = zero;
    for (int t = 0; t <= k; ++t) {
      F sg(t % 2 ? -1 : 1);
      s1 = s1 + str_w(sym(false, 0, t) * sym(true, t, k - t) * P).scaled(sg);
      s2 = s2 + str_w(sym(true, 0, t) * sym(false, t, k - t) * P).scaled(sg);
    }
    expect_mat(r, "sum_r (-1)^r str S_r A_{r+1..k} L_1 ... L_k = 0 at " + tag, s1, zero);
    expect_mat(r, "sum_r (-1)^r str A_r S_{r+1..k} L_1 ... L_k = 0 at " + tag, s2, zero);
    F qk = q_integer(qf, k);
    for (int t = 1; t < k; ++t) {
      Mat<F> lhs = str_w(sym(false, 0, t) * sym(true, t, k - t) * P);
      Mat<F> a = str_w(sym(false, 0, t) * sym(true, t - 1, k - t + 1) * P);
      Mat<F> b = str_w(sym(false, 0, t + 1) * sym(true, t, k - t) * P);
      F ca = q_integer(qf, t) * q_integer(qf, k - t + 1) / qk, cb = q_integer(qf, t + 1) * q_integer(qf, k - t) / qk;
      expect_mat(r, "splitting identity for r = " + std::to_string(t) + " at " + tag, lhs,
                 Mat<F>(a.scaled(ca) + b.scaled(cb)));
    }
  });
  return r;
}

}  // namespace sberez

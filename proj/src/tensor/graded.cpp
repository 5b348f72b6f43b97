// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/tensor/graded.hpp"

#include <atomic>

namespace sberez {
namespace {
std::atomic<Composition> g_composition{Composition::Koszul};
thread_local int t_override = -1;
}  // namespace

Composition composition() {
  return t_override < 0 ? g_composition.load() : static_cast<Composition>(t_override);
}
void set_composition(Composition c) { g_composition.store(c); }

CompositionScope::CompositionScope(Composition c) : saved_(t_override) { t_override = static_cast<int>(c); }
CompositionScope::~CompositionScope() { t_override = saved_; }

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<int> digits(long idx, int n, int legs) {
  std::vector<int> d(legs);
  for (int t = legs - 1; t >= 0; --t) {
    d[t] = static_cast<int>(idx % n);
    idx /= n;
  }
  return d;
}

long flat_index(const std::vector<int>& d, int n) {
  long r = 0;
  for (int x : d) r = r * n + x;
  return r;
}

int twist_sign(const GradedDim& dim, const std::vector<int>& I, const std::vector<int>& J) {
  if (composition() == Composition::Plain) return 1;
  int s = 0;
  int acc = 0;  // sum of p(J_t) over earlier legs
  for (size_t u = 0; u < I.size(); ++u) {
    s += (dim.parity(I[u]) + dim.parity(J[u])) * acc;
    acc += dim.parity(J[u]);
  }
  return s % 2 ? -1 : 1;
}

std::vector<int> D_exponents(const GradedDim& dim) {
  std::vector<int> e(dim.n());
  for (int i = 0; i < dim.n(); ++i) e[i] = i < dim.M ? 2 * (i + 1) : 2 * dim.M - 2 * (i - dim.M);
  return e;
}

std::vector<int> basis_parities(const GradedDim& dim, int legs) {
  int total = ipow(dim.n(), legs);
  std::vector<int> p(total);
  for (int r = 0; r < total; ++r) {
    int s = 0;
    for (int d : digits(r, dim.n(), legs)) s += dim.parity(d);
    p[r] = s % 2;
  }
  return p;
}

}  // namespace sberez

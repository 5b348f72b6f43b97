// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sberez/scalar/mpoly.hpp"
#include "sberez/tensor/graded.hpp"

namespace sberez {

// Generator l^{sign}_{ij}^{(r)}, 0-based i, j; inv marks the adjoined
// inverse of a diagonal r = 0 generator.
struct GenIndex {
  int sign = +1;
  int i = 0, j = 0, r = 0;
  bool inv = false;

  auto key() const { return std::make_tuple(sign, i, j, r, inv); }
  bool operator<(const GenIndex& o) const { return key() < o.key(); }
  bool operator==(const GenIndex& o) const { return key() == o.key(); }
  int parity(const GradedDim& d) const { return (d.parity(i) + d.parity(j)) % 2; }
  bool diagonal() const { return i == j; }
  std::string str() const;
};

// The order on generators: (j - i, i, r) lexicographic.
bool precedes(const GenIndex& a, const GenIndex& b);

using Word = std::vector<GenIndex>;

// Element of the free superalgebra: words with Laurent-polynomial
// coefficients in q (and the formal symbol qc standing for q^c).
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const MPoly& c);
  static NCPoly gen(const GenIndex& g);
  static NCPoly one() { return NCPoly(MPoly(1)); }

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly scaled(const MPoly& c) const;
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }
  bool zero() const { return terms_.empty(); }

  const std::map<Word, MPoly>& terms() const { return terms_; }
  std::string str() const;

  // Drop every word containing an off-diagonal generator.
  NCPoly hc_project() const;

 private:
  void add(Word w, const MPoly& c);
  std::map<Word, MPoly> terms_;
};

inline bool is_zero(const NCPoly& p) { return p.zero(); }

// Cancel l g^{-1}, g^{-1} g and l^+_{ii}(0) l^-_{ii}(0) pairs (either order).
Word simplify_word(Word w);

}  // namespace sberez

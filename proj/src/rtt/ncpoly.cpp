// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/rtt/ncpoly.hpp"

#include <sstream>

namespace sberez {

std::string GenIndex::str() const {
  std::ostringstream os;
  os << "l" << (sign > 0 ? "+" : "-") << (inv ? "inv" : "") << "[" << i + 1 << "," << j + 1 << "," << r << "]";
  return os.str();
}

bool precedes(const GenIndex& a, const GenIndex& b) {
  return std::make_tuple(a.j - a.i, a.i, a.r) < std::make_tuple(b.j - b.i, b.i, b.r);
}

namespace {
bool cancels(const GenIndex& x, const GenIndex& y) {
  if (!x.diagonal() || !y.diagonal() || x.i != y.i || x.r != 0 || y.r != 0) return false;
  if (x.sign == y.sign) return x.inv != y.inv;
  return !x.inv && !y.inv;
}
}  // namespace

Word simplify_word(Word w) {
  Word out;
  for (const auto& g : w) {
    if (!out.empty() && cancels(out.back(), g))
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

NCPoly::NCPoly(const MPoly& c) {
  if (!c.zero()) terms_[Word{}] = c;
}

NCPoly NCPoly::gen(const GenIndex& g) {
  NCPoly p;
  p.terms_[Word{g}] = MPoly(1);
  return p;
}

void NCPoly::add(Word w, const MPoly& c) {
  if (c.zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.zero()) terms_.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add(simplify_word(std::move(w)), c1 * c2);
    }
  return r;
}

NCPoly NCPoly::scaled(const MPoly& c) const {
  NCPoly r;
  if (c.zero()) return r;
  for (const auto& [w, x] : terms_) r.add(w, x * c);
  return r;
}

NCPoly NCPoly::hc_project() const {
  NCPoly r;
  for (const auto& [w, c] : terms_) {
    bool diag = true;
    for (const auto& g : w) diag = diag && g.diagonal();
    if (diag) r.terms_[w] = c;
  }
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (const auto& g : w) os << "*" << g.str();
  }
  return os.str();
}

}  // namespace sberez

// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include "sberez/scalar/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sberez {
namespace {

struct Registry {
  std::mutex mu;
  std::vector<std::string> names{"q", "z", "w", "x", "a", "z1", "z2", "z3", "a1", "a2", "qc"};
};

Registry& registry() {
  static Registry r;
  return r;
}

Exps zero_exps() {
  Exps e{};
  e.fill(0);
  return e;
}

// Descending lexicographic order on exponent vectors, slot 0 first.
bool exps_greater(const Exps& a, const Exps& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

}  // namespace

int var_index(const std::string& name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  for (size_t i = 0; i < r.names.size(); ++i)
    if (r.names[i] == name) return static_cast<int>(i);
  if (static_cast<int>(r.names.size()) >= kMaxVars) throw std::length_error("too many symbols: " + name);
  r.names.push_back(name);
  return static_cast<int>(r.names.size()) - 1;
}

const std::string& var_name(int idx) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(idx);
}

int var_count() {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return static_cast<int>(r.names.size());
}

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly::MPoly(const Rational& c) {
  if (!is_zero(c)) t_.emplace(zero_exps(), c);
}

MPoly MPoly::var(const std::string& name, int e) {
  Exps x = zero_exps();
  x[var_index(name)] = static_cast<int16_t>(e);
  return monomial(x, Rational(1));
}

MPoly MPoly::monomial(const Exps& e, const Rational& c) {
  MPoly p;
  if (!is_zero(c)) p.t_.emplace(e, c);
  return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) t_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  if (zero() || o.zero()) return r;
  for (const auto& [ea, ca] : t_) {
    for (const auto& [eb, cb] : o.t_) {
      Exps e;
      for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<int16_t>(ea[i] + eb[i]);
      Rational c = ca * cb;
      auto it = r.t_.find(e);
      if (it == r.t_.end()) {
        r.t_.emplace(e, c);
      } else {
        it->second += c;
        if (is_zero(it->second)) r.t_.erase(it);
      }
    }
  }
  return r;
}

MPoly MPoly::operator/(const MPoly& o) const {
  if (o.zero()) throw DivisionByZero("zero polynomial");
  if (!o.is_monomial()) throw std::domain_error("polynomial division by non-monomial " + o.str());
  const auto& [e, c] = *o.t_.begin();
  Exps ne;
  for (int i = 0; i < kMaxVars; ++i) ne[i] = static_cast<int16_t>(-e[i]);
  return *this * monomial(ne, Rational(1 / c));
}

Rational MPoly::eval(const std::vector<Rational>& values) const {
  Rational s = 0;
  for (const auto& [e, c] : t_) {
    Rational m = c;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      if (i >= static_cast<int>(values.size())) throw std::invalid_argument("unassigned symbol " + var_name(i));
      if (e[i] < 0 && is_zero(values[i])) throw DivisionByZero("symbol " + var_name(i) + " = 0");
      m *= rpow(values[i], e[i]);
    }
    s += m;
  }
  return s;
}

MPoly MPoly::subs(int slot, const Rational& value) const {
  MPoly r;
  for (const auto& [e, c] : t_) {
    Exps ne = e;
    ne[slot] = 0;
    if (e[slot] < 0 && is_zero(value)) throw DivisionByZero("symbol " + var_name(slot) + " = 0");
    r += monomial(ne, Rational(c * rpow(value, e[slot])));
  }
  return r;
}

MPoly MPoly::scale_var(int slot, const MPoly& factor) const {
  if (!factor.is_monomial()) throw std::domain_error("scale factor must be a monomial");
  MPoly r;
  for (const auto& [e, c] : t_) {
    MPoly f(Rational(1));
    int k = e[slot];
    MPoly base = k >= 0 ? factor : MPoly(1) / factor;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) f = f * base;
    r += monomial(e, c) * f;
  }
  return r;
}

int MPoly::min_exp(int slot) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (first || e[slot] < m) m = e[slot];
    first = false;
  }
  return m;
}

int MPoly::max_exp(int slot) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (first || e[slot] > m) m = e[slot];
    first = false;
  }
  return m;
}

bool MPoly::uses(int slot) const {
  for (const auto& [e, c] : t_)
    if (e[slot] != 0) return true;
  return false;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& kv : t_) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return exps_greater(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* kv : order) {
    const Exps& e = kv->first;
    Rational c = kv->second;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      std::string f = var_name(i);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(f);
    }
    bool unit = c == 1;
    if (!unit || factors.empty()) {
      os << c.get_str();
      if (!factors.empty()) os << "*";
    }
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace sberez

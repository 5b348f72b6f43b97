// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sberez/scalar/rational.hpp"

namespace sberez {

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dense row-major matrix over a ring F. Products skip zero entries, which
// keeps the sparse R-matrix operators cheap.
template <class F>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), d_(static_cast<size_t>(r) * c, F(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  Mat operator+(const Mat& o) const {
    same_shape(o);
    Mat r = *this;
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    same_shape(o);
    Mat r = *this;
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] - o.d_[i];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.d_) x = -x;
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
    std::vector<std::vector<int>> nz(o.r_);
    for (int k = 0; k < o.r_; ++k)
      for (int j = 0; j < o.c_; ++j)
        if (!is_zero(o(k, j))) nz[k].push_back(j);
    Mat r(r_, o.c_);
    for (int i = 0; i < r_; ++i) {
      for (int k = 0; k < c_; ++k) {
        const F& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (int j : nz[k]) r(i, j) += a * o(k, j);
      }
    }
    return r;
  }
  Mat scaled(const F& s) const {
    Mat r = *this;
    for (auto& x : r.d_)
      if (!is_zero(x)) x = x * s;
    return r;
  }
  Mat& operator+=(const Mat& o) { return *this = *this + o; }
  Mat& operator-=(const Mat& o) { return *this = *this - o; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero_matrix() const {
    for (const auto& x : d_)
      if (!is_zero(x)) return false;
    return true;
  }
  bool is_identity() const { return r_ == c_ && *this == identity(r_); }

  // First nonzero entry (row, col) or (-1, -1).
  std::pair<int, int> first_nonzero() const {
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!is_zero((*this)(i, j))) return {i, j};
    return {-1, -1};
  }

  Mat transpose() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Gauss-Jordan elimination; F must be a field.
  Mat inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    int n = r_;
    Mat a = *this;
    Mat inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!is_zero(a(r, col))) {
          piv = r;
          break;
        }
      if (piv < 0) throw SingularMatrix("singular matrix (column " + std::to_string(col) + ")");
      if (piv != col) {
        for (int j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      }
      F pinv = F(1) / a(col, col);
      for (int j = 0; j < n; ++j) {
        if (!is_zero(a(col, j))) a(col, j) = a(col, j) * pinv;
        if (!is_zero(inv(col, j))) inv(col, j) = inv(col, j) * pinv;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || is_zero(a(r, col))) continue;
        F f = a(r, col);
        for (int j = 0; j < n; ++j) {
          if (!is_zero(a(col, j))) a(r, j) = a(r, j) - f * a(col, j);
          if (!is_zero(inv(col, j))) inv(r, j) = inv(r, j) - f * inv(col, j);
        }
      }
    }
    return inv;
  }

  template <class G, class Fn>
  Mat<G> map(Fn fn) const {
    Mat<G> r(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) r(i, j) = fn((*this)(i, j));
    return r;
  }

 private:
  void same_shape(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  int r_, c_;
  std::vector<F> d_;
};

}  // namespace sberez

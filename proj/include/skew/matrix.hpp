// Copyright 2026 The skewmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "skew/errors.hpp"

namespace skew {

// Operations a coefficient field must expose to the generic code in this
// library. PrimeField and ZechField model it; ExtRing models the ring part
// (try_inv may fail there).
template <class F>
concept RingLike = requires(const F& f, const typename F::Elem& a) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  f.try_inv(a);
};

template <class F>
concept FieldLike = RingLike<F> && requires(const F& f,
                                            const typename F::Elem& a) {
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
};

// Dense row-major matrix over a field. The matrix stores values only; every
// arithmetic routine takes the field explicitly.
template <class Elem>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Elem& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw UsageError("Matrix: entry count does not match dimensions");
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Elem& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Elem> entries() const { return entries_; }
  std::span<Elem> entries() { return entries_; }

  std::vector<Elem> column(std::size_t j) const {
    std::vector<Elem> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  void set_column(std::size_t j, std::span<const Elem> v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> entries_;
};

// Below this size (smallest dimension) multiplication is classical.
inline constexpr std::size_t kDefaultStrassenThreshold = 64;

template <FieldLike F>
Matrix<typename F::Elem> mat_identity(const F& field, std::size_t n) {
  Matrix<typename F::Elem> out(n, n, field.zero());
  for (std::size_t i = 0; i < n; ++i) out(i, i) = field.one();
  return out;
}

template <FieldLike F>
bool mat_is_identity(const F& field, const Matrix<typename F::Elem>& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& v = a(i, j);
      if (i == j ? !field.equal(v, field.one()) : !field.is_zero(v)) {
        return false;
      }
    }
  }
  return true;
}

template <FieldLike F>
bool mat_is_zero(const F& field, const Matrix<typename F::Elem>& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [&](const auto& v) { return field.is_zero(v); });
}

template <FieldLike F>
bool mat_equal(const F& field, const Matrix<typename F::Elem>& a,
               const Matrix<typename F::Elem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (!field.equal(a.entries()[i], b.entries()[i])) return false;
  }
  return true;
}

namespace detail {

template <FieldLike F>
Matrix<typename F::Elem> mat_mul_classical(const F& field,
                                           const Matrix<typename F::Elem>& a,
                                           const Matrix<typename F::Elem>& b) {
  Matrix<typename F::Elem> out(a.rows(), b.cols(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (field.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

template <FieldLike F>
Matrix<typename F::Elem> mat_block(const F& field,
                                   const Matrix<typename F::Elem>& a,
                                   std::size_t r0, std::size_t c0,
                                   std::size_t rows, std::size_t cols) {
  Matrix<typename F::Elem> out(rows, cols, field.zero());
  for (std::size_t i = 0; i < rows && r0 + i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols && c0 + j < a.cols(); ++j) {
      out(i, j) = a(r0 + i, c0 + j);
    }
  }
  return out;
}

template <FieldLike F>
Matrix<typename F::Elem> mat_combine(const F& field,
                                     const Matrix<typename F::Elem>& a,
                                     const Matrix<typename F::Elem>& b,
                                     bool subtract) {
  Matrix<typename F::Elem> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = subtract ? field.sub(a(i, j), b(i, j))
                           : field.add(a(i, j), b(i, j));
    }
  }
  return out;
}

// Strassen on matrices padded to an even common shape. Recursion stops at
// the threshold.
template <FieldLike F>
Matrix<typename F::Elem> mat_mul_strassen(const F& field,
                                          const Matrix<typename F::Elem>& a,
                                          const Matrix<typename F::Elem>& b,
                                          std::size_t threshold) {
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  if (std::min({m, k, n}) < threshold || threshold < 2) {
    return mat_mul_classical(field, a, b);
  }
  const std::size_t hm = (m + 1) / 2, hk = (k + 1) / 2, hn = (n + 1) / 2;
  auto A11 = mat_block(field, a, 0, 0, hm, hk);
  auto A12 = mat_block(field, a, 0, hk, hm, hk);
  auto A21 = mat_block(field, a, hm, 0, hm, hk);
  auto A22 = mat_block(field, a, hm, hk, hm, hk);
  auto B11 = mat_block(field, b, 0, 0, hk, hn);
  auto B12 = mat_block(field, b, 0, hn, hk, hn);
  auto B21 = mat_block(field, b, hk, 0, hk, hn);
  auto B22 = mat_block(field, b, hk, hn, hk, hn);
  auto add = [&](const auto& x, const auto& y) {
    return mat_combine(field, x, y, false);
  };
  auto sub = [&](const auto& x, const auto& y) {
    return mat_combine(field, x, y, true);
  };
  auto mul = [&](const auto& x, const auto& y) {
    return mat_mul_strassen(field, x, y, threshold);
  };
  auto M1 = mul(add(A11, A22), add(B11, B22));
  auto M2 = mul(add(A21, A22), B11);
  auto M3 = mul(A11, sub(B12, B22));
  auto M4 = mul(A22, sub(B21, B11));
  auto M5 = mul(add(A11, A12), B22);
  auto M6 = mul(sub(A21, A11), add(B11, B12));
  auto M7 = mul(sub(A12, A22), add(B21, B22));
  auto C11 = add(sub(add(M1, M4), M5), M7);
  auto C12 = add(M3, M5);
  auto C21 = add(M2, M4);
  auto C22 = add(add(sub(M1, M2), M3), M6);
  Matrix<typename F::Elem> out(m, n, field.zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool top = i < hm, left = j < hn;
      const std::size_t ii = top ? i : i - hm, jj = left ? j : j - hn;
      out(i, j) = top ? (left ? C11(ii, jj) : C12(ii, jj))
                      : (left ? C21(ii, jj) : C22(ii, jj));
    }
  }
  return out;
}

}  // namespace detail

template <FieldLike F>
Matrix<typename F::Elem> mat_mul(
    const F& field, const Matrix<typename F::Elem>& a,
    const Matrix<typename F::Elem>& b,
    std::size_t strassen_threshold = kDefaultStrassenThreshold) {
  if (a.cols() != b.rows()) {
    throw UsageError("mat_mul: incompatible dimensions");
  }
  return detail::mat_mul_strassen(field, a, b, strassen_threshold);
}

template <FieldLike F>
std::vector<typename F::Elem> mat_apply(const F& field,
                                        const Matrix<typename F::Elem>& a,
                                        std::span<const typename F::Elem> v) {
  if (a.cols() != v.size()) {
    throw UsageError("mat_apply: incompatible dimensions");
  }
  std::vector<typename F::Elem> out(a.rows(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto acc = field.zero();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!field.is_zero(v[j])) acc = field.add(acc, field.mul(a(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

// Reduced row echelon form in place; returns the pivot column of each pivot
// row. Only the first `pivot_cols` columns are eligible as pivots.
template <FieldLike F>
std::vector<std::size_t> mat_row_reduce(const F& field,
                                        Matrix<typename F::Elem>& a,
                                        std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && field.is_zero(a(sel, col))) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    const auto inv = field.inv(a(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = field.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || field.is_zero(a(i, col))) continue;
      const auto factor = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(i, j) = field.sub(a(i, j), field.mul(factor, a(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <FieldLike F>
std::size_t mat_rank(const F& field, Matrix<typename F::Elem> a) {
  return mat_row_reduce(field, a, a.cols()).size();
}

template <FieldLike F>
Matrix<typename F::Elem> mat_inv(const F& field,
                                 const Matrix<typename F::Elem>& a) {
  if (a.rows() != a.cols()) throw UsageError("mat_inv: matrix is not square");
  const std::size_t n = a.rows();
  Matrix<typename F::Elem> aug(n, 2 * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = field.one();
  }
  if (mat_row_reduce(field, aug, n).size() != n) {
    throw SingularMatrixError("mat_inv: matrix is singular");
  }
  Matrix<typename F::Elem> out(n, n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

// Solves a x = v. Underdetermined consistent systems return the solution
// with free variables set to zero; inconsistent ones throw.
template <FieldLike F>
std::vector<typename F::Elem> mat_solve(const F& field,
                                        const Matrix<typename F::Elem>& a,
                                        std::span<const typename F::Elem> v) {
  if (a.rows() != v.size()) throw UsageError("mat_solve: dimension mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<typename F::Elem> aug(m, n + 1, field.zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = v[i];
  }
  const auto pivots = mat_row_reduce(field, aug, n);
  for (std::size_t i = pivots.size(); i < m; ++i) {
    if (!field.is_zero(aug(i, n))) {
      throw SingularMatrixError("mat_solve: inconsistent system");
    }
  }
  std::vector<typename F::Elem> x(n, field.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, n);
  return x;
}

}  // namespace skew

#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "torlab/error.hpp"
#include "torlab/scalar.hpp"

namespace torlab::linalg {

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.div(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::ShapeMismatch, "entry count does not match rows*cols");
    }
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<T>& entries() const { return data_; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class U, class Fn>
  Matrix<U> map(Fn&& fn) const {
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(fn(x));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
using Vector = std::vector<T>;

template <ExactField F>
Matrix<typename F::value_type> multiply(const F& f, const Matrix<typename F::value_type>& a,
                                        const Matrix<typename F::value_type>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product shapes");
  Matrix<typename F::value_type> out(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!f.is_zero(b(k, j))) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

template <ExactField F>
Vector<typename F::value_type> apply(const F& f, const Matrix<typename F::value_type>& m,
                                     std::span<const typename F::value_type> v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector shapes");
  Vector<typename F::value_type> out(m.rows(), f.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!f.is_zero(m(i, j)) && !f.is_zero(v[j])) out[i] = f.add(out[i], f.mul(m(i, j), v[j]));
    }
  }
  return out;
}

template <ExactField F>
bool is_zero_matrix(const F& f, const Matrix<typename F::value_type>& m) {
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [&](const auto& x) { return f.is_zero(x); });
}

template <ExactField F>
bool is_zero_vector(const F& f, std::span<const typename F::value_type> v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

/// Reduced row echelon form together with its pivot columns.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

template <ExactField F>
Echelon<typename F::value_type> row_reduce(const F& f, Matrix<typename F::value_type> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    auto inv = f.div(f.one(), m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!f.is_zero(m(row, c))) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const F& f, const Matrix<typename F::value_type>& m) {
  return row_reduce(f, m).rank();
}

/// Basis of {v : m v = 0}, one vector per free column of the echelon form.
template <ExactField F>
std::vector<Vector<typename F::value_type>> kernel_basis(const F& f,
                                                         const Matrix<typename F::value_type>& m) {
  auto ech = row_reduce(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<typename F::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v[ech.pivots[r]] = f.neg(ech.reduced(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Matrix whose columns are the given vectors (all of length `height`).
template <class T>
Matrix<T> from_columns(std::size_t height, const std::vector<Vector<T>>& columns, const T& zero) {
  Matrix<T> m(height, columns.size(), zero);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != height) throw Error(ErrorKind::ShapeMismatch, "column length");
    for (std::size_t r = 0; r < height; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

template <class T>
std::vector<Vector<T>> to_columns(const Matrix<T>& m) {
  std::vector<Vector<T>> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

/// Solves m x = b; returns nullopt when b is outside the column space.
template <ExactField F>
std::optional<Vector<typename F::value_type>> solve(const F& f,
                                                    const Matrix<typename F::value_type>& m,
                                                    std::span<const typename F::value_type> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length");
  Matrix<typename F::value_type> aug(m.rows(), m.cols() + 1, f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto ech = row_reduce(f, std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  Vector<typename F::value_type> x(m.cols(), f.zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
  return x;
}

}  // namespace torlab::linalg

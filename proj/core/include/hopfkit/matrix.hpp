#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/poly.hpp"

namespace hopfkit {

/// Dense row-major matrix over an exact field (Rational or CycScalar).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data does not match its shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  /// One column per vector.
  static Matrix from_columns(std::span<const std::vector<T>> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }
  static Matrix column(const std::vector<T>& v) { return from_columns(std::span(&v, 1), v.size()); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  const std::vector<T>& data() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (hopfkit::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!hopfkit::is_zero(b(k, j))) m(i, j) = m(i, j) + x * b(k, j);
        }
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] + b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] - b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (T& x : a.data_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (!hopfkit::is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
struct Echelon {
  Matrix<T> reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The first `limit` columns are eligible as pivots
/// (all columns by default); the rest are carried along as right-hand sides.
template <class T>
Echelon<T> rref(Matrix<T> m, std::size_t limit = static_cast<std::size_t>(-1)) {
  const std::size_t cols = std::min(limit, m.cols());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && hopfkit::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const T inv = T(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!hopfkit::is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || hopfkit::is_zero(m(r, c))) continue;
      const T f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!hopfkit::is_zero(m(row, j))) m(r, j) = m(r, j) - f * m(row, j);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of the right null space; one vector per free column, with a 1 in that column.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a) {
  const Echelon<T> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
struct Solution {
  Matrix<T> particular;      // one solution X of A X = B (free variables set to zero)
  std::size_t kernel_dim = 0;
};

/// Solve A X = B exactly; nullopt signals an inconsistent system.
template <class T>
std::optional<Solution<T>> rref_solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("rref_solve: A and B have different row counts");
  Matrix<T> aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  const Echelon<T> e = rref(std::move(aug), a.cols());
  const std::size_t r = e.pivots.size();
  for (std::size_t i = r; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!hopfkit::is_zero(e.reduced(i, a.cols() + j))) return std::nullopt;
    }
  }
  Solution<T> s{Matrix<T>(a.cols(), b.cols()), a.cols() - r};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) s.particular(e.pivots[i], j) = e.reduced(i, a.cols() + j);
  }
  return s;
}

/// Coordinates of v in the span of `basis` (assumed independent), if v lies in it.
template <class T>
std::optional<std::vector<T>> coordinates(std::span<const std::vector<T>> basis, const std::vector<T>& v) {
  const Matrix<T> a = Matrix<T>::from_columns(basis, v.size());
  const auto s = rref_solve(a, Matrix<T>::column(v));
  if (!s) return std::nullopt;
  return s->particular.col(0);
}

/// True when the two families span the same subspace.
template <class T>
bool same_span(std::span<const std::vector<T>> a, std::span<const std::vector<T>> b, std::size_t dim) {
  std::vector<std::vector<T>> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  const std::size_t ra = rank(Matrix<T>::from_columns(a, dim));
  const std::size_t rb = rank(Matrix<T>::from_columns(b, dim));
  const std::size_t rab = rank(Matrix<T>::from_columns(std::span<const std::vector<T>>(all), dim));
  return ra == rb && rb == rab;
}

template <class T>
T trace(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("trace of a non-square matrix");
  T t(0);
  for (std::size_t i = 0; i < a.rows(); ++i) t = t + a(i, i);
  return t;
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && hopfkit::is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det = det * m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (hopfkit::is_zero(m(r, c))) continue;
      const T f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
    }
  }
  return det;
}

/// p(A) by Horner's scheme.
template <class T>
Matrix<T> evaluate(const Poly<T>& p, const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> acc(n, n);
  const Matrix<T> id = Matrix<T>::identity(n);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * a + p.coeffs()[i] * id;
  return acc;
}

template <class T>
struct CharMinPoly {
  Poly<T> characteristic;
  Poly<T> minimal;
};

/// Characteristic polynomial by reduction to Hessenberg form; minimal polynomial
/// as the first linear dependency among I, A, A^2, ...
template <class T>
CharMinPoly<T> char_min_poly(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("char_min_poly of a non-square matrix");
  const std::size_t n = a.rows();

  Matrix<T> h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && hopfkit::is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      h.swap_rows(i, m);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    const T t = h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (hopfkit::is_zero(h(r, m - 1))) continue;
      const T u = h(r, m - 1) / t;
      for (std::size_t j = 0; j < n; ++j) h(r, j) = h(r, j) - u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) = h(j, m) + u * h(j, r);
    }
  }
  // p_0 = 1, p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}
  std::vector<Poly<T>> p(n + 1);
  p[0] = Poly<T>::constant(T(1));
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = Poly<T>::linear(h(m - 1, m - 1)) * p[m - 1];
    T t(1);
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h(m - i, m - i - 1);
      const T coef = h(m - i - 1, m - 1) * t;
      if (!hopfkit::is_zero(coef)) p[m] = p[m] - coef * p[m - i - 1];
    }
  }

  // Krylov dependency on flattened powers.
  std::vector<std::vector<T>> powers;
  Matrix<T> pw = Matrix<T>::identity(n);
  Poly<T> minimal;
  for (std::size_t k = 0; k <= n; ++k) {
    if (!powers.empty()) {
      const auto c = coordinates<T>(std::span<const std::vector<T>>(powers), pw.data());
      if (c) {
        std::vector<T> coeffs(k + 1, T(0));
        for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*c)[i];
        coeffs[k] = T(1);
        minimal = Poly<T>(std::move(coeffs));
        break;
      }
    }
    powers.push_back(pw.data());
    pw = pw * a;
  }
  if (n == 0) minimal = Poly<T>::constant(T(1));
  return {p[n], minimal};
}

}  // namespace hopfkit

#pragma once

// Exact matrices and elimination over Q and Z. Nothing here touches floating
// point; GMP supplies the arbitrary-precision scalars.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsheaf/error.hpp"

namespace nilsheaf {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<T>& data() const { return a_; }
  std::vector<T>& data() { return a_; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorCode::InternalError, 0, "matrix shape mismatch");
    Matrix z(x.rows_, y.cols_);
    for (int r = 0; r < x.rows_; ++r)
      for (int k = 0; k < x.cols_; ++k) {
        const T& v = x(r, k);
        if (v == 0) continue;
        for (int c = 0; c < y.cols_; ++c)
          if (y(k, c) != 0) z(r, c) += v * y(k, c);
      }
    return z;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }

  friend Matrix operator-(Matrix x, const Matrix& y) {
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }

  friend Matrix operator*(const T& s, Matrix x) {
    for (auto& v : x.a_) v *= s;
    return x;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

using ExactMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

template <class T>
Matrix<T> commutator(const Matrix<T>& x, const Matrix<T>& y) {
  return x * y - y * x;
}

// Reduced row echelon form in place; pivots are taken at the first nonzero
// column. Returns the pivot columns.
inline std::vector<int> rref(ExactMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::vector<std::vector<Rational>> nullspace(ExactMatrix m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols()), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline int rank(ExactMatrix m) { return static_cast<int>(rref(m).size()); }

// Scales a rational vector to a primitive integer vector.
inline std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v)
    if (x != 0) l = lcm(l, Integer(x.get_den()));
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    Rational y = v[k] * l;
    out[k] = y.get_num();
    g = gcd(g, out[k]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

// Incrementally built row space over Z with fraction-free reduction. Stored
// rows are primitive with a positive leading entry at a distinct pivot.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the stored rows; the result is zero iff v lies in the span.
  std::vector<Integer> reduce(std::vector<Integer> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t p = pivots_[r];
      if (v[p] == 0) continue;
      const auto& row = rows_[r];
      Integer a = row[p];
      Integer b = v[p];
      Integer g = gcd(a, b);
      a /= g;
      b /= g;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (row[k] == 0) {
          if (a != 1 && v[k] != 0) v[k] *= a;
        } else {
          v[k] = a * v[k] - b * row[k];
        }
      }
      make_primitive(v);
    }
    return v;
  }

  bool contains(const std::vector<Integer>& v) const { return is_zero(reduce(v)); }

  // Returns true when v was independent of the stored rows.
  bool insert(const std::vector<Integer>& v) {
    auto w = reduce(v);
    for (std::size_t k = 0; k < dim_; ++k) {
      if (w[k] == 0) continue;
      if (w[k] < 0)
        for (auto& x : w) x = -x;
      rows_.push_back(std::move(w));
      pivots_.push_back(k);
      return true;
    }
    return false;
  }

  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

  static bool is_zero(const std::vector<Integer>& v) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }

 private:
  static void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) {
      if (x == 0) continue;
      g = gcd(g, x);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& x : v) x /= g;
  }

  std::size_t dim_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

// Coordinates of v in the (independent) columns `basis`, or nullopt when v is
// outside their span.
inline std::optional<std::vector<Rational>> coordinates(const std::vector<std::vector<Integer>>& basis,
                                                        const std::vector<Integer>& v) {
  const int d = static_cast<int>(v.size());
  const int k = static_cast<int>(basis.size());
  ExactMatrix m(d, k + 1);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < d; ++r) m(r, c) = basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  for (int r = 0; r < d; ++r) m(r, k) = v[static_cast<std::size_t>(r)];
  std::vector<int> piv = rref(m);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  if (static_cast<int>(piv.size()) != k) throw Error(ErrorCode::InternalError, 0, "coordinate basis is dependent");
  std::vector<Rational> x(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) x[static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = m(r, k);
  return x;
}

inline std::vector<Integer> flatten(const IntMatrix& m) { return m.data(); }

inline IntMatrix unflatten(const std::vector<Integer>& v, int n) {
  IntMatrix m(n, n);
  m.data() = v;
  return m;
}

}  // namespace nilsheaf

#pragma once

#include <vector>

#include "mvhermite/errors.hpp"
#include "mvhermite/polynomial.hpp"

namespace mvh {

// Dense square matrix over a commutative ring T. Dimensions here are small
// (N <= ~12), so no sparsity and no clever blocking.
template <class T>
class Matrix {
 public:
  Matrix() : n_(0) {}
  explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  int dim() const { return n_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  Matrix operator+(const Matrix& o) const {
    check_dim(o);
    Matrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_dim(o);
    Matrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Matrix operator-() const {
    Matrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    check_dim(o);
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const T& aik = (*this)(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < n_; ++j) r(i, j) = r(i, j) + aik * o(k, j);
      }
    return r;
  }
  Matrix scale(const T& s) const {
    Matrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }
  bool is_diagonal() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && !is_zero((*this)(i, j))) return false;
    return true;
  }
  bool is_symmetric() const { return *this == transpose(); }
  // Zero diagonal, support only on the sub- and superdiagonal.
  bool is_tridiagonal_zero_diagonal() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int d = i > j ? i - j : j - i;
        if (d != 1 && !is_zero((*this)(i, j))) return false;
      }
    return true;
  }

  T trace() const {
    T t(0);
    for (int i = 0; i < n_; ++i) t = t + (*this)(i, i);
    return t;
  }

 private:
  void check_dim(const Matrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix dimension mismatch");
  }
  int n_;
  std::vector<T> a_;
};

template <class T>
bool is_zero(const Matrix<T>& m) {
  return m.is_zero_matrix();
}

// Exact inverse by Gauss-Jordan elimination; T must be a field.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const int n = m.dim();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularSystem("matrix is singular");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    T d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

template <class To, class From>
Matrix<To> convert_matrix(const Matrix<From>& m);

template <>
inline Matrix<double> convert_matrix<double, Rational>(const Matrix<Rational>& m) {
  Matrix<double> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

inline double max_abs(const Matrix<double>& m) {
  double r = 0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

}  // namespace mvh

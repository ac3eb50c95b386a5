#pragma once

#include <vector>

#include "mvhermite/matrix.hpp"

namespace mvh {

// Matrix-coefficient polynomial in one variable, stored densely by power.
// Multiplication is noncommutative; transpose_coeffs transposes each
// coefficient (every scalar ring in use is real, so this is the adjoint).
template <class T>
class MatrixPolynomial {
 public:
  MatrixPolynomial() : dim_(0) {}
  explicit MatrixPolynomial(int dim) : dim_(dim) {}
  explicit MatrixPolynomial(Matrix<T> constant)
      : dim_(constant.dim()), c_{std::move(constant)} {
    trim();
  }
  MatrixPolynomial(int dim, std::vector<Matrix<T>> coeffs)
      : dim_(dim), c_(std::move(coeffs)) {
    for (const auto& m : c_)
      if (m.dim() != dim_) throw DimensionMismatch("coefficient dim mismatch");
    trim();
  }

  static MatrixPolynomial identity(int dim) {
    return MatrixPolynomial(Matrix<T>::identity(dim));
  }
  // x^k * M as a polynomial.
  static MatrixPolynomial monomial(Matrix<T> m, long k) {
    std::vector<Matrix<T>> c(k + 1, Matrix<T>(m.dim()));
    int dim = m.dim();
    c[k] = std::move(m);
    return MatrixPolynomial(dim, std::move(c));
  }
  // Scalar polynomial times a constant matrix.
  static MatrixPolynomial from_scalar_poly(const Polynomial<T>& p,
                                           const Matrix<T>& m) {
    std::vector<Matrix<T>> c;
    c.reserve(p.degree() + 1);
    for (long k = 0; k <= p.degree(); ++k) c.push_back(m.scale(p.coeff(k)));
    return MatrixPolynomial(m.dim(), std::move(c));
  }

  int dim() const { return dim_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }

  Matrix<T> coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return Matrix<T>(dim_);
    return c_[k];
  }
  void set_coeff(long k, Matrix<T> m) {
    if (m.dim() != dim_) throw DimensionMismatch("coefficient dim mismatch");
    if (k >= static_cast<long>(c_.size()))
      c_.resize(k + 1, Matrix<T>(dim_));
    c_[k] = std::move(m);
    trim();
  }
  Matrix<T> leading_coeff() const {
    return c_.empty() ? Matrix<T>(dim_) : c_.back();
  }

  MatrixPolynomial operator+(const MatrixPolynomial& o) const {
    check_dim(o);
    std::vector<Matrix<T>> r(std::max(c_.size(), o.c_.size()), Matrix<T>(dim_));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return MatrixPolynomial(dim_, std::move(r));
  }
  MatrixPolynomial operator-(const MatrixPolynomial& o) const {
    return *this + (-o);
  }
  MatrixPolynomial operator-() const {
    std::vector<Matrix<T>> r;
    r.reserve(c_.size());
    for (const auto& m : c_) r.push_back(-m);
    return MatrixPolynomial(dim_, std::move(r));
  }
  MatrixPolynomial operator*(const MatrixPolynomial& o) const {
    check_dim(o);
    if (c_.empty() || o.c_.empty()) return MatrixPolynomial(dim_);
    std::vector<Matrix<T>> r(c_.size() + o.c_.size() - 1, Matrix<T>(dim_));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return MatrixPolynomial(dim_, std::move(r));
  }

  MatrixPolynomial scale(const T& s) const {
    std::vector<Matrix<T>> r;
    r.reserve(c_.size());
    for (const auto& m : c_) r.push_back(m.scale(s));
    return MatrixPolynomial(dim_, std::move(r));
  }
  MatrixPolynomial operator*(const T& s) const { return scale(s); }
  MatrixPolynomial left_mul(const Matrix<T>& m) const {
    std::vector<Matrix<T>> r;
    r.reserve(c_.size());
    for (const auto& ck : c_) r.push_back(m * ck);
    return MatrixPolynomial(dim_, std::move(r));
  }
  MatrixPolynomial right_mul(const Matrix<T>& m) const {
    std::vector<Matrix<T>> r;
    r.reserve(c_.size());
    for (const auto& ck : c_) r.push_back(ck * m);
    return MatrixPolynomial(dim_, std::move(r));
  }

  MatrixPolynomial transpose_coeffs() const {
    std::vector<Matrix<T>> r;
    r.reserve(c_.size());
    for (const auto& m : c_) r.push_back(m.transpose());
    return MatrixPolynomial(dim_, std::move(r));
  }

  MatrixPolynomial derivative() const {
    if (c_.size() <= 1) return MatrixPolynomial(dim_);
    std::vector<Matrix<T>> r(c_.size() - 1, Matrix<T>(dim_));
    for (size_t k = 1; k < c_.size(); ++k)
      r[k - 1] = c_[k].scale(T(static_cast<int>(k)));
    return MatrixPolynomial(dim_, std::move(r));
  }

  Matrix<T> evaluate(const T& x) const {
    Matrix<T> r(dim_);
    for (size_t k = c_.size(); k-- > 0;) r = r.scale(x) + c_[k];
    return r;
  }

  // Q(x + a).
  MatrixPolynomial compose_shift(const T& a) const {
    MatrixPolynomial r(dim_);
    for (size_t k = c_.size(); k-- > 0;) {
      // r <- r*(x+a) + c_k
      MatrixPolynomial shifted(dim_);
      for (long j = 0; j <= r.degree(); ++j) {
        Matrix<T> m = r.coeff(j);
        shifted.add_to_coeff(j + 1, m);
        shifted.add_to_coeff(j, m.scale(a));
      }
      shifted.add_to_coeff(0, c_[k]);
      shifted.trim();
      r = std::move(shifted);
    }
    return r;
  }

  bool operator==(const MatrixPolynomial& o) const {
    return dim_ == o.dim_ && c_ == o.c_;
  }
  bool operator!=(const MatrixPolynomial& o) const { return !(*this == o); }

 private:
  void add_to_coeff(long k, const Matrix<T>& m) {
    if (k >= static_cast<long>(c_.size())) c_.resize(k + 1, Matrix<T>(dim_));
    c_[k] = c_[k] + m;
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero_matrix()) c_.pop_back();
  }
  void check_dim(const MatrixPolynomial& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("matrix polynomial dim mismatch");
  }
  int dim_;
  std::vector<Matrix<T>> c_;
};

template <class T>
bool is_zero(const MatrixPolynomial<T>& p) {
  return p.is_zero_poly();
}

// exp(x M) for nilpotent M: sum_{k<dim} x^k M^k / k!, exact.
template <class T>
MatrixPolynomial<T> nilpotent_exp(const Matrix<T>& m) {
  const int n = m.dim();
  std::vector<Matrix<T>> c;
  c.reserve(n);
  Matrix<T> p = Matrix<T>::identity(n);
  for (int k = 0; k < n; ++k) {
    c.push_back(p.scale(ScalarFrom<T>::rational(Rational(1) / Rational(factorial(k)))));
    p = p * m;
  }
  if (!p.is_zero_matrix()) throw NotNilpotent("matrix power dim did not vanish");
  return MatrixPolynomial<T>(n, std::move(c));
}

// exp(s M) evaluated at a scalar s, for nilpotent M.
template <class T>
Matrix<T> nilpotent_exp_at(const Matrix<T>& m, const T& s) {
  return nilpotent_exp(m).evaluate(s);
}

// Second-order differential operator acting from the right:
// Q |-> Q'' F2 + Q' F1 + Q F0.
template <class T>
struct RightDiffOp {
  MatrixPolynomial<T> F2, F1, F0;
};

template <class T>
MatrixPolynomial<T> apply_right_diffop(const MatrixPolynomial<T>& q,
                                       const RightDiffOp<T>& d) {
  MatrixPolynomial<T> dq = q.derivative();
  return dq.derivative() * d.F2 + dq * d.F1 + q * d.F0;
}

template <class To, class From>
MatrixPolynomial<To> convert_matrix_poly(const MatrixPolynomial<From>& p);

template <>
inline MatrixPolynomial<double> convert_matrix_poly<double, Rational>(
    const MatrixPolynomial<Rational>& p) {
  std::vector<Matrix<double>> c;
  c.reserve(p.degree() + 1);
  for (long k = 0; k <= p.degree(); ++k)
    c.push_back(convert_matrix<double, Rational>(p.coeff(k)));
  return MatrixPolynomial<double>(p.dim(), std::move(c));
}

}  // namespace mvh

#pragma once

#include <vector>

#include "mvhermite/rational.hpp"

namespace mvh {

// Conversion shims so generic code can build scalars of any ring in use
// (Rational, double, Polynomial<Rational> for the Toda time variable).
template <class T>
struct ScalarFrom {
  static T rational(const Rational& r) { return T(r); }
};
template <>
struct ScalarFrom<double> {
  static double rational(const Rational& r) { return r.get_d(); }
};

// Dense univariate polynomial over a commutative ring T.
// Trailing zeros are trimmed; the zero polynomial has degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int v) : c_{T(v)} { trim(); }
  explicit Polynomial(T v) : c_{std::move(v)} { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial variable() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }

  T coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return T(0);
    return c_[k];
  }
  void set_coeff(long k, T v) {
    if (k >= static_cast<long>(c_.size())) c_.resize(k + 1, T(0));
    c_[k] = std::move(v);
    trim();
  }
  const std::vector<T>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial operator-() const {
    std::vector<T> r(c_);
    for (auto& x : r) x = -x;
    Polynomial p;
    p.c_ = std::move(r);
    return p;
  }
  Polynomial operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Polynomial(std::move(r));
  }
  Polynomial operator*(const T& s) const {
    std::vector<T> r(c_);
    for (auto& x : r) x = x * s;
    return Polynomial(std::move(r));
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<T> r(c_.size() - 1, T(0));
    for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * T(static_cast<int>(k));
    return Polynomial(std::move(r));
  }

  T evaluate(const T& x) const {
    T r(0);
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
  }

  // P(x + a), expanded exactly via Horner in (x + a).
  Polynomial compose_shift(const T& a) const {
    Polynomial r;
    Polynomial xa(std::vector<T>{a, T(1)});
    for (size_t k = c_.size(); k-- > 0;) r = r * xa + Polynomial(c_[k]);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Polynomial<T>& p) {
  return p.is_zero_poly();
}

template <class T>
struct ScalarFrom<Polynomial<T>> {
  static Polynomial<T> rational(const Rational& r) {
    return Polynomial<T>(ScalarFrom<T>::rational(r));
  }
};

using ScalarPolynomial = Polynomial<Rational>;

}  // namespace mvh

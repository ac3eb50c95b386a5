#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "mvhermite/errors.hpp"

namespace mvh {

using Integer = mpz_class;

// Exact rational scalar, always reduced to lowest terms with a positive
// denominator. All identity checks in the library run over Rational; doubles
// enter only through quadrature and the ODE integrator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(int n, int d) : Rational(Integer(n), Integer(d)) {}
  Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}
  Rational(const Integer& n, const Integer& d) : v_(n, d) {
    if (sgn(d) == 0) throw InvalidParameters("zero denominator");
    v_.canonicalize();
  }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  double get_d() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  friend int sgn(const Rational& q) { return sgn(q.v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (sgn(o.v_) == 0) throw InvalidParameters("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;

  friend Rational parse_rational(std::string_view s);
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

// Parses "p/q" or "p" (decimal strings are rejected on purpose).
Rational parse_rational(std::string_view s);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Integer factorial(long n);
Integer double_factorial(long n);
Integer binomial(long n, long k);

// Rising factorial (a)_k = a(a+1)...(a+k-1); empty product for k = 0.
Rational pochhammer(const Rational& a, long k);

// Integer power with negative exponents allowed for nonzero base.
Rational pow_rational(const Rational& base, long e);

bool is_nonpositive_integer(const Rational& a);

// Terminating 3F2(a1,a2,a3; b1,b2; 1), summed term by term.
// Requires some numerator parameter in {0,-1,-2,...}; throws
// DivergentSeries otherwise and PoleInDenominator if a denominator
// Pochhammer vanishes before the termination index.
Rational hyp3f2_terminating(const Rational& a1, const Rational& a2,
                            const Rational& a3, const Rational& b1,
                            const Rational& b2);

// A rational multiple of an integer power of sqrt(pi). Squared norms and
// moments carry exactly one such factor, so sums never need to mix powers.
struct PiScalar {
  Rational coeff;
  int pi_power = 0;

  PiScalar() : coeff(0) {}
  PiScalar(Rational c, int p) : coeff(std::move(c)), pi_power(p) {
    if (is_zero(coeff)) pi_power = 0;
  }

  bool is_zero_value() const { return mvh::is_zero(coeff); }

  PiScalar operator+(const PiScalar& o) const;
  PiScalar operator-(const PiScalar& o) const;
  PiScalar operator*(const PiScalar& o) const;
  PiScalar operator*(const Rational& r) const;
  PiScalar operator-() const { return PiScalar(-coeff, pi_power); }

  bool operator==(const PiScalar& o) const {
    return coeff == o.coeff && pi_power == o.pi_power;
  }

  double to_double() const;
};

// Gaussian moment: integral of x^k e^{-x^2} over the real line.
// Zero for odd k, sqrt(pi) (k-1)!!/2^{k/2} for even k.
PiScalar gauss_moment(long k);

// Same moment with the sqrt(pi) factored out.
Rational gauss_moment_rational(long k);

}  // namespace mvh

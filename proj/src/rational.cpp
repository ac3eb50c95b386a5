#include "mvhermite/rational.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace mvh {

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.v_.get_str();
}

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw InvalidParameters("empty rational literal");
  std::string str(s);
  if (str.find('.') != std::string::npos)
    throw InvalidParameters("rational literal must be 'p' or 'p/q', got: " + str);
  mpq_class q;
  if (q.set_str(str, 10) != 0)
    throw InvalidParameters("cannot parse rational: " + str);
  if (sgn(mpz_class(q.get_den())) == 0)
    throw InvalidParameters("zero denominator in rational: " + str);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string to_string(const Rational& q) { return q.str(); }

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer double_factorial(long n) {
  if (n <= 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational pochhammer(const Rational& a, long k) {
  Rational r(1);
  Rational term(a);
  for (long j = 0; j < k; ++j) {
    r *= term;
    term += 1;
  }
  return r;
}

Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (is_zero(base)) {
    if (e < 0) throw InvalidParameters("negative power of zero");
    return Rational(0);
  }
  Rational b = e > 0 ? base : Rational(1) / base;
  long n = e > 0 ? e : -e;
  Rational r(1);
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

bool is_nonpositive_integer(const Rational& a) {
  return a.den() == 1 && sgn(a) <= 0;
}

Rational hyp3f2_terminating(const Rational& a1, const Rational& a2,
                            const Rational& a3, const Rational& b1,
                            const Rational& b2) {
  // Termination index: the smallest -a over non-positive-integer numerators.
  long stop = -1;
  for (const Rational* a : {&a1, &a2, &a3}) {
    if (is_nonpositive_integer(*a)) {
      long m = -a->num().get_si();
      if (stop < 0 || m < stop) stop = m;
    }
  }
  if (stop < 0)
    throw DivergentSeries("3F2 requires a non-positive integer numerator parameter");

  Rational sum(0), term(1);
  Rational u1(a1), u2(a2), u3(a3), v1(b1), v2(b2);
  for (long j = 0; j < stop; ++j) {
    sum += term;
    if (is_zero(v1) || is_zero(v2))
      throw PoleInDenominator("3F2 denominator parameter hit a pole before termination");
    term *= u1 * u2 * u3;
    term /= v1 * v2 * Rational(j + 1);
    u1 += 1;
    u2 += 1;
    u3 += 1;
    v1 += 1;
    v2 += 1;
  }
  sum += term;
  return sum;
}

PiScalar PiScalar::operator+(const PiScalar& o) const {
  if (is_zero_value()) return o;
  if (o.is_zero_value()) return *this;
  if (pi_power != o.pi_power)
    throw InvalidParameters("PiScalar addition with mismatched sqrt(pi) powers");
  return PiScalar(coeff + o.coeff, pi_power);
}

PiScalar PiScalar::operator-(const PiScalar& o) const { return *this + (-o); }

PiScalar PiScalar::operator*(const PiScalar& o) const {
  return PiScalar(coeff * o.coeff, pi_power + o.pi_power);
}

PiScalar PiScalar::operator*(const Rational& r) const {
  return PiScalar(coeff * r, pi_power);
}

double PiScalar::to_double() const {
  return coeff.get_d() * std::pow(std::numbers::pi, 0.5 * pi_power);
}

PiScalar gauss_moment(long k) {
  if (k % 2 != 0) return PiScalar();
  return PiScalar(gauss_moment_rational(k), 1);
}

Rational gauss_moment_rational(long k) {
  if (k % 2 != 0) return Rational(0);
  Rational r(double_factorial(k - 1));
  return r / pow_rational(Rational(2), k / 2);
}

}  // namespace mvh

#include "mvhermite/hermite.hpp"

namespace mvh {

ScalarPolynomial hermite(long n) {
  ScalarPolynomial h0(1);
  if (n == 0) return h0;
  ScalarPolynomial x = ScalarPolynomial::variable();
  ScalarPolynomial h1 = x * Rational(2);
  for (long k = 1; k < n; ++k) {
    ScalarPolynomial next = x * h1 * Rational(2) - h0 * Rational(2 * k);
    h0 = std::move(h1);
    h1 = std::move(next);
  }
  return h1;
}

ScalarPolynomial hermite_imag(long m) {
  ScalarPolynomial g0(1);
  if (m == 0) return g0;
  ScalarPolynomial x = ScalarPolynomial::variable();
  ScalarPolynomial g1 = x * Rational(-2);
  for (long k = 1; k < m; ++k) {
    ScalarPolynomial next = x * g1 * Rational(-2) + g0 * Rational(2 * k);
    g0 = std::move(g1);
    g1 = std::move(next);
  }
  return g1;
}

std::vector<std::pair<long, Rational>> hermite_linearize(long k, long l) {
  std::vector<std::pair<long, Rational>> out;
  long rmax = std::min(k, l);
  out.reserve(rmax + 1);
  for (long r = 0; r <= rmax; ++r) {
    Rational c = Rational(binomial(k, r)) * Rational(binomial(l, r)) *
                 pow_rational(Rational(2), r) * Rational(factorial(r));
    out.emplace_back(k + l - 2 * r, c);
  }
  return out;
}

}  // namespace mvh

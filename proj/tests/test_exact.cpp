#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvhermite/rational.hpp"

using namespace mvh;

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
  CHECK(pochhammer(Rational(-3), 1) == Rational(-3));
  // (1/2)(3/2)(5/2)
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("pochhammer splitting property") {
  // (a)_{j+k} = (a)_j (a+j)_k on a sweep of rational a.
  for (int num = -6; num <= 6; ++num)
    for (int den : {1, 2, 3})
      for (long j = 0; j <= 4; ++j)
        for (long k = 0; k <= 4; ++k) {
          Rational a(num, den);
          CHECK(pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k));
        }
}

TEST_CASE("terminating 3F2 values") {
  // Zero numerator terminates at j = 0.
  CHECK(hyp3f2_terminating(Rational(0), Rational(5, 7), Rational(3),
                           Rational(1, 3), Rational(2)) == Rational(1));
  // 1 + (-1)(1)(1)/(1*1*1) = 0.
  CHECK(hyp3f2_terminating(Rational(-1), Rational(1), Rational(1), Rational(1),
                           Rational(1)) == Rational(0));
  // Brute-force summation oracle for (-2, -1, 3; 1, 2).
  Rational expect(0);
  for (long j = 0; j <= 2; ++j)
    expect += pochhammer(Rational(-2), j) * pochhammer(Rational(-1), j) *
              pochhammer(Rational(3), j) /
              (pochhammer(Rational(1), j) * pochhammer(Rational(2), j) *
               Rational(factorial(j)));
  CHECK(hyp3f2_terminating(Rational(-2), Rational(-1), Rational(3), Rational(1),
                           Rational(2)) == expect);
}

TEST_CASE("3F2 error paths") {
  CHECK_THROWS_AS(hyp3f2_terminating(Rational(1, 2), Rational(1), Rational(2),
                                     Rational(1), Rational(1)),
                  DivergentSeries);
  // Denominator hits zero at j = 1 < termination index 3.
  CHECK_THROWS_AS(hyp3f2_terminating(Rational(-3), Rational(1), Rational(1),
                                     Rational(-1), Rational(1)),
                  PoleInDenominator);
}

TEST_CASE("dual Hahn three-term recurrence for the 3F2 coefficients") {
  auto F = [](const Rational& gamma, int N, int n, int r, int s) {
    return hyp3f2_terminating(Rational(1 - s), Rational(r - N),
                              Rational(n + 1) + gamma, Rational(1 - N),
                              Rational(1) + gamma);
  };
  for (const Rational& gamma : {Rational(1, 2), Rational(1), Rational(5, 2)})
    for (int N : {2, 3, 5})
      for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= N; ++r)
          for (int s = 1; s <= N; ++s) {
            Rational cs = F(gamma, N, n, r, s);
            Rational up = s < N ? F(gamma, N, n, r, s + 1) : Rational(0);
            Rational down = s > 1 ? F(gamma, N, n, r, s - 1) : Rational(0);
            Rational lhs =
                (Rational(s) + gamma) * Rational(s - N) * up -
                ((Rational(s) + gamma) * Rational(s - n - r) +
                 Rational(s - 1) * Rational(s - N - 1)) *
                    cs +
                Rational(s - n - r - 1) * Rational(s - 1) * down;
            CHECK(lhs == Rational(n) * (Rational(N + 1 - r) + gamma) * cs);
          }
}

TEST_CASE("gaussian moments") {
  CHECK(gauss_moment(0) == PiScalar(Rational(1), 1));
  CHECK(gauss_moment(1).is_zero_value());
  CHECK(gauss_moment(4) == PiScalar(Rational(3, 4), 1));
  // m_{2k}/m_{2k-2} = (2k-1)/2.
  for (long m = 1; m <= 12; ++m)
    CHECK(gauss_moment_rational(2 * m) ==
          gauss_moment_rational(2 * m - 2) * Rational(2 * m - 1, 2L));
}

TEST_CASE("PiScalar arithmetic") {
  PiScalar a(Rational(1, 2), 1), b(Rational(1, 3), 1);
  CHECK((a + b) == PiScalar(Rational(5, 6), 1));
  CHECK((a * b) == PiScalar(Rational(1, 6), 2));
  CHECK_THROWS_AS(a + PiScalar(Rational(1), 2), InvalidParameters);
  PiScalar zero;
  CHECK((a + zero) == a);
  CHECK(PiScalar(Rational(0), 5).pi_power == 0);  // canonical zero
  CHECK(PiScalar(Rational(1), 2).to_double() == doctest::Approx(3.14159265358979));
}

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidParameters);
  CHECK_THROWS_AS(parse_rational(""), InvalidParameters);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 7) == 0);
  CHECK(factorial(6) == 720);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(-1) == 1);
}

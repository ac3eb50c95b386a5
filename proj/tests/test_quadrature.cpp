#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mvhermite/mvops.hpp"
#include "mvhermite/quadrature.hpp"

using namespace mvh;

TEST_CASE("small rules") {
  QuadratureRule r1 = gauss_hermite(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));

  // M=2: nodes at the roots of H_2, +-1/sqrt(2), weights sqrt(pi)/2.
  QuadratureRule r2 = gauss_hermite(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2.nodes[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(r2.nodes[0] == -r2.nodes[1]);
  CHECK(r2.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_hermite(0), InvalidParameters);
}

TEST_CASE("weights sum to sqrt(pi) and nodes are symmetric") {
  for (int M : {3, 8, 40, 80}) {
    QuadratureRule r = gauss_hermite(M);
    double sum = 0;
    for (double w : r.weights) sum += w;
    CHECK(std::abs(sum - std::sqrt(std::numbers::pi)) < 1e-12);
    for (int i = 0; i < M / 2; ++i) {
      CHECK(r.nodes[i] == -r.nodes[M - 1 - i]);
      CHECK(r.weights[i] == r.weights[M - 1 - i]);
    }
  }
}

TEST_CASE("moment exactness through degree 2M-1") {
  // x^4 with M=3 equals 3 sqrt(pi)/4 essentially to machine precision.
  {
    QuadratureRule r = gauss_hermite(3);
    double got = r.integrate([](double x) { return x * x * x * x; });
    CHECK(std::abs(got - gauss_moment(4).to_double()) < 1e-13);
  }
  for (int M : {5, 20, 80}) {
    QuadratureRule r = gauss_hermite(M);
    for (long d = 0; d <= 2 * M - 1; ++d) {
      double got = r.integrate([&](double x) { return std::pow(x, d); });
      double expect = gauss_moment(d).to_double();
      if (d % 2 == 1) {
        CHECK(got == 0.0);  // exact pairwise cancellation
      } else {
        CHECK(std::abs(got - expect) <= 1e-12 * std::abs(expect));
      }
    }
  }
}

TEST_CASE("matrix inner products") {
  WeightFamily fam(FamilyId::pochhammer, 2, Rational(1));
  DMatPoly wp = convert_matrix_poly<double, Rational>(gauged_weight(fam).poly_part);
  QuadratureRule rule = gauss_hermite(80);

  MVOPSequence seq = mvop_by_recurrence(fam, 0, 3);
  std::vector<DMatPoly> p;
  for (int n = 0; n <= 3; ++n)
    p.push_back(convert_matrix_poly<double, Rational>(seq.polys[n]));

  // <P_0, P_0> equals the zeroth moment.
  DMatrix h0 = inner_product(p[0], p[0], wp, rule);
  std::vector<PiScalar> expect = zeroth_moment(fam);
  for (int i = 0; i < 2; ++i)
    CHECK(std::abs(h0(i, i) - expect[i].to_double()) < 1e-12 * expect[i].to_double());

  // <P_2, P_1> vanishes.
  CHECK(max_abs(inner_product(p[2], p[1], wp, rule)) < 1e-10);

  // Symmetry <P,Q>^T = <Q,P>.
  DMatrix pq = inner_product(p[2], p[3], wp, rule);
  DMatrix qp = inner_product(p[3], p[2], wp, rule);
  CHECK(max_abs(pq.transpose() - qp) < 1e-10);

  CHECK_THROWS_AS(inner_product(p[3], p[3], wp, gauss_hermite(3)), UnderResolved);
}

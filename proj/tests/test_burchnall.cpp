#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvhermite/burchnall.hpp"

using namespace mvh;

namespace {

const WeightFamily kP21(FamilyId::pochhammer, 2, Rational(1));

std::vector<WeightFamily> points() {
  return {
      kP21,
      WeightFamily(FamilyId::gamma, 3, Rational(1, 2), Rational(1)),
      WeightFamily(FamilyId::flat, 3, Rational(1), Rational(1), Rational(1),
                   Rational(1, 2)),
  };
}

std::vector<RMatPoly> test_polys(int N) {
  std::vector<RMatPoly> qs;
  qs.push_back(RMatPoly::identity(N));
  qs.push_back(RMatPoly::monomial(RMatrix::identity(N), 1) + RMatPoly(matrix_A(N)));
  qs.push_back(RMatPoly::monomial(matrix_J(N), 2));
  qs.push_back(RMatPoly::monomial(RMatrix::identity(N), 4) +
               RMatPoly::monomial(matrix_A(N).transpose(), 1));
  return qs;
}

}  // namespace

TEST_CASE("raising basics") {
  CHECK(apply_raising(RMatPoly(2), kP21, 0).is_zero_poly());
  // Q = I: derivative term drops, leaving Psi^T.
  CHECK(apply_raising(RMatPoly::identity(2), kP21, 0) ==
        pearson_psi(kP21, 0).transpose_coeffs());
}

TEST_CASE("raising agrees with the derivative-of-weight form") {
  // (Q S)(x) W^{(nu)} = d/dx (Q W^{(nu+1)}), as polynomial parts with the
  // Gaussian stripped: (QS) P^{(nu)} = (Q P^{(nu+1)})' - 2x Q P^{(nu+1)},
  // after restoring the dropped unit.
  for (const WeightFamily& fam : points()) {
    const int N = fam.N();
    RMatPoly w0 = gauged_weight(fam, 0).poly_part;
    RMatPoly w1 = gauged_weight(fam, 1).poly_part;
    RMatPoly x_id = RMatPoly::monomial(RMatrix::identity(N), 1);
    for (const RMatPoly& q : test_polys(N)) {
      RMatPoly qw = q * w1;
      RMatPoly lhs = (qw.derivative() - x_id * qw * Rational(2)) * fam.unit_ratio(0);
      CHECK(lhs == apply_raising(q, fam, 0) * w0);
    }
  }
}

TEST_CASE("iterated raising reproduces the polynomials") {
  for (const WeightFamily& fam : points()) {
    MVOPSequence seq = mvop_by_recurrence(fam, 0, 5);
    for (int n = 0; n <= 5; ++n) {
      RMatPoly chain = iterated_raising(RMatPoly::identity(fam.N()), fam, 0, n);
      CHECK(chain == seq.polys[n].left_mul(inverse(g_prefactor(fam, 0, n))));
    }
  }
}

TEST_CASE("operational expansion") {
  for (const WeightFamily& fam : points()) {
    const int N = fam.N();
    for (const RMatPoly& q : test_polys(N)) {
      CHECK(burchnall_expand(q, fam, 0, 0) == q);  // empty chain
      for (int n = 1; n <= 4; ++n)
        CHECK(burchnall_expand(q, fam, 0, n) == iterated_raising(q, fam, 0, n));
    }
  }
  // Q = I, n = 1: only k=0 survives, G_1^{-1} P_1.
  RMatPoly lhs = burchnall_expand(RMatPoly::identity(2), kP21, 0, 1);
  RMatPoly p1 = mvop_by_recurrence(kP21, 0, 1).polys[1];
  CHECK(lhs == p1.left_mul(inverse(g_prefactor(kP21, 0, 1))));
}

TEST_CASE("product expansion") {
  for (const WeightFamily& fam : points()) {
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m + n <= 6 && m <= 3; ++m) {
        INFO("n=" << n << " m=" << m);
        CHECK(burchnall_product_residual(fam, 0, n, m).is_zero_poly());
      }
  }
}

TEST_CASE("phi products cache consistency") {
  for (const WeightFamily& fam : points()) {
    RMatPoly direct = RMatPoly::identity(fam.N());
    for (int k = 0; k < 3; ++k) direct = direct * pearson_phi(fam, k);
    CHECK(phi_product(fam, 0, 3) == direct);
  }
}

TEST_CASE("integrated expansion by quadrature") {
  QuadratureRule rule = gauss_hermite(80);
  for (const WeightFamily& fam : points()) {
    const int N = fam.N();
    for (int n = 1; n <= 2; ++n) {
      // Polynomial Q and M.
      ExpPoly q{0.0, DMatPoly::monomial(DMatrix::identity(N), 2)};
      ExpPoly m{0.0, DMatPoly::monomial(DMatrix::identity(N), n + 2)};
      CHECK(integrated_burchnall_residual(fam, 0, n, q, m, rule) < 1e-10);
      // Exponential Q.
      ExpPoly qe{0.5, DMatPoly::identity(N)};
      CHECK(integrated_burchnall_residual(fam, 0, n, qe, m, rule) < 1e-8);
    }
  }
}

TEST_CASE("integrated special case vanishes") {
  QuadratureRule rule = gauss_hermite(80);
  // p = 0, n = 1, t = 1/2, N = 2 plus the requested sweep.
  CHECK(integrated_special_case(kP21, 0, 1, 0, Rational(1, 2), rule) < 1e-8);
  for (const WeightFamily& fam : points())
    for (int n = 1; n <= 3; ++n)
      for (int p = 0; p < n; ++p)
        for (const Rational& t : {Rational(1, 2), Rational(1)})
          CHECK(integrated_special_case(fam, 0, n, p, t, rule) < 1e-8);
  // t = 0 reduces to plain orthogonality against x^p.
  CHECK(integrated_special_case(kP21, 0, 2, 1, Rational(0), rule) < 1e-10);
}

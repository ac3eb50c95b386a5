#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvhermite/hermite.hpp"
#include "mvhermite/weight.hpp"

using namespace mvh;

namespace {

const std::vector<WeightFamily> kSamplePoints = {
    WeightFamily(FamilyId::pochhammer, 1, Rational(1)),
    WeightFamily(FamilyId::pochhammer, 3, Rational(1, 2)),
    WeightFamily(FamilyId::pochhammer, 4, Rational(5, 2)),
    WeightFamily(FamilyId::gamma, 3, Rational(3, 2), Rational(1)),
    WeightFamily(FamilyId::gamma, 4, Rational(1), Rational(1, 2)),
    WeightFamily(FamilyId::flat, 3, Rational(1), Rational(1), Rational(2), Rational(0)),
    WeightFamily(FamilyId::flat, 4, Rational(1, 2), Rational(1), Rational(1), Rational(1, 2)),
};

}  // namespace

TEST_CASE("triangular factors") {
  CHECK(build_L(1) == RMatPoly::identity(1));
  CHECK(build_L(2).coeff(1)(1, 0) == Rational(2));  // H_1 = 2x

  // N=3 entry (3,1) is H_2/2! = 2x^2 - 1.
  RMatPoly L3 = build_L(3);
  CHECK(L3.coeff(2)(2, 0) == Rational(2));
  CHECK(L3.coeff(0)(2, 0) == Rational(-1));

  CHECK(build_L_inverse(2).coeff(1)(1, 0) == Rational(-2));  // G_1 = -2x

  // Exact two-sided inverse at N = 5.
  RMatPoly L = build_L(5), Li = build_L_inverse(5);
  CHECK(L * Li == RMatPoly::identity(5));
  CHECK(Li * L == RMatPoly::identity(5));
}

TEST_CASE("derivative and exponential structure of L") {
  CHECK(matrix_A(1) == RMatrix(1));
  RMatrix a3(3);
  a3(1, 0) = 2;
  a3(2, 1) = 2;
  CHECK(matrix_A(3) == a3);

  RMatPoly L = build_L(4);
  RMatrix A = matrix_A(4);
  CHECK(L.derivative() == L.left_mul(A));
  CHECK(L.derivative() == L.right_mul(A));

  // L(x) = L(0) e^{xA}; A commutes with L(0).
  RMatrix L0 = L.evaluate(Rational(0));
  CHECK(L == nilpotent_exp(A).left_mul(L0));
  CHECK(L0 * A == A * L0);
}

TEST_CASE("conjugation of J through L") {
  for (int N : {2, 3, 5}) {
    RMatPoly L = build_L(N), Li = build_L_inverse(N);
    RMatrix A = matrix_A(N), J = matrix_J(N);
    RMatPoly expect(J - (A * A).scale(Rational(1, 2)));
    expect.set_coeff(1, A);
    CHECK(Li * RMatPoly(J) * L == expect);
  }
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(WeightFamily(FamilyId::pochhammer, 2, Rational(-1)).validate(),
                  InvalidParameters);
  CHECK_THROWS_AS(WeightFamily(FamilyId::gamma, 2, Rational(1), Rational(0)).validate(),
                  InvalidParameters);
  CHECK_THROWS_AS(WeightFamily(FamilyId::flat, 2, Rational(1), Rational(1),
                               Rational(1), Rational(-1))
                      .validate(),
                  InvalidParameters);
  CHECK_THROWS_AS(WeightFamily(FamilyId::pochhammer, 0, Rational(1)).validate(),
                  InvalidParameters);
  WeightFamily(FamilyId::flat, 3, Rational(1, 2)).validate(5);
}

TEST_CASE("pearson coefficient constraints") {
  for (const WeightFamily& fam : kSamplePoints) {
    const int N = fam.N();
    for (int s = 0; s <= 2; ++s) {
      // delta_k^{(nu+1)} u = (d k + c) delta_k^{(nu)}
      for (int k = 1; k <= N; ++k)
        CHECK(fam.delta_hat(k, s + 1) * fam.unit_ratio(s) ==
              (fam.d(s) * k + fam.c(s)) * fam.delta_hat(k, s));
      // alpha ratio constraint, independent of the shift
      for (int k = 1; k < N; ++k)
        CHECK(fam.alpha_sq(k + 1) / fam.alpha_sq(k) ==
              fam.d(s) * k * (N - k) * fam.delta_hat(k + 1, s) /
                  (2 * (fam.d(s) * k + fam.c(s)) * fam.delta_hat(k, s)));
    }
    CHECK(fam.alpha_sq(1) == Rational(1));
  }
}

TEST_CASE("gauged weight against the closed-form entries") {
  for (const WeightFamily& fam : kSamplePoints) {
    const int N = fam.N();
    GaugedWeight gw = gauged_weight(fam);
    CHECK(gw.poly_part == gw.poly_part.transpose_coeffs());
    for (int m = 1; m <= N; ++m)
      for (int n = 1; n <= N; ++n) {
        ScalarPolynomial expect;
        for (const auto& [idx, c] : weight_entry_closed_form(fam, m, n))
          expect = expect + hermite(idx) * c;
        ScalarPolynomial got;
        for (long k = 0; k <= gw.poly_part.degree(); ++k)
          got.set_coeff(k, gw.poly_part.coeff(k)(m - 1, n - 1));
        CHECK(got == expect);
      }
  }
}

TEST_CASE("gauged weight worked examples") {
  // N=1: the scalar Hermite weight, polynomial part delta_1.
  WeightFamily one(FamilyId::gamma, 1, Rational(2), Rational(1));
  CHECK(gauged_weight(one).poly_part ==
        RMatPoly(RMatrix::diagonal({one.delta_hat(1, 0)})));

  // N=2 pochhammer nu=1: entry (1,1) = 1, entry (2,1) = H_1 * 1.
  WeightFamily p21(FamilyId::pochhammer, 2, Rational(1));
  GaugedWeight gw = gauged_weight(p21);
  CHECK(gw.poly_part.coeff(0)(0, 0) == Rational(1));
  CHECK(gw.poly_part.coeff(1)(1, 0) == Rational(2));
  auto entry21 = weight_entry_closed_form(p21, 2, 1);
  REQUIRE(entry21.size() == 1);
  CHECK(entry21[0] == std::pair<long, Rational>{1, Rational(1)});
}

TEST_CASE("positive definiteness spot checks") {
  for (const WeightFamily& fam : kSamplePoints) {
    GaugedWeight gw = gauged_weight(fam);
    for (const Rational& x : {Rational(0), Rational(3, 2), Rational(-7, 3)})
      CHECK(positive_definite_at(gw, x));
  }
}

TEST_CASE("zeroth moment matches the integral oracle") {
  for (const WeightFamily& fam : kSamplePoints) {
    const int N = fam.N();
    GaugedWeight gw = gauged_weight(fam);
    // Termwise integration of the polynomial part against e^{-x^2}.
    RMatrix integral(N);
    for (long d = 0; d <= gw.poly_part.degree(); ++d) {
      Rational g = gauss_moment_rational(d);
      if (!is_zero(g)) integral = integral + gw.poly_part.coeff(d).scale(g);
    }
    std::vector<PiScalar> h0 = zeroth_moment(fam);
    CHECK(integral.is_diagonal());
    for (int m = 0; m < N; ++m) {
      CHECK(h0[m].pi_power == 1);
      CHECK(sgn(h0[m].coeff) > 0);
      CHECK(h0[m].coeff == integral(m, m));
    }
  }
}

TEST_CASE("zeroth moment worked example") {
  // N=2 pochhammer nu=1: diag(1, 6) sqrt(pi) in the gauge.
  std::vector<PiScalar> h0 = zeroth_moment(WeightFamily(FamilyId::pochhammer, 2, Rational(1)));
  CHECK(h0[0] == PiScalar(Rational(1), 1));
  CHECK(h0[1] == PiScalar(Rational(6), 1));
}

TEST_CASE("pearson pair identities") {
  for (const WeightFamily& fam : kSamplePoints) {
    const int N = fam.N();
    RMatPoly w0 = gauged_weight(fam, 0).poly_part;
    RMatPoly w1 = gauged_weight(fam, 1).poly_part;
    Rational u = fam.unit_ratio(0);

    CHECK(w1 * u == w0 * pearson_phi(fam));

    RMatPoly x_id = RMatPoly::monomial(RMatrix::identity(N), 1);
    RMatPoly lhs = (w1.derivative() - x_id * w1 * Rational(2)) * u;
    CHECK(lhs == w0 * pearson_psi(fam));
  }
}

TEST_CASE("pearson pair shape") {
  WeightFamily fam(FamilyId::pochhammer, 2, Rational(1));
  // lc(Psi) = diag(-3, -2); Psi(0) = [[0, 2], [1/2, 0]].
  RMatrix lc = pearson_psi_lc(fam);
  CHECK(lc == RMatrix::diagonal({Rational(-3), Rational(-2)}));
  RMatrix psi0 = pearson_psi_at0(fam);
  CHECK(psi0(0, 1) == Rational(2));
  CHECK(psi0(1, 0) == Rational(1, 2));
  CHECK(psi0(0, 0) == Rational(0));
  CHECK(psi0(1, 1) == Rational(0));

  for (const WeightFamily& f : kSamplePoints) {
    RMatrix psi0f = pearson_psi_at0(f);
    CHECK(psi0f.is_tridiagonal_zero_diagonal());
    RMatrix lcf = pearson_psi_lc(f);
    CHECK(lcf.is_diagonal());
    for (int i = 0; i < f.N(); ++i) CHECK(sgn(lcf(i, i)) < 0);
    // Phi is degree one with constant term d(J + (A^T)^2/2) + c.
    CHECK(pearson_phi(f).degree() == (f.N() > 1 ? 1 : 0));
  }

  // N=1 degenerates to the scalar Hermite Pearson data.
  WeightFamily one(FamilyId::pochhammer, 1, Rational(2));
  CHECK(pearson_phi(one) == RMatPoly(RMatrix::diagonal({one.d(0) + one.c(0)})));
  RMatPoly psi1 = pearson_psi(one);
  CHECK(psi1.coeff(1)(0, 0) == -2 * (one.d(0) + one.c(0)));
  CHECK(psi1.coeff(0).is_zero_matrix());
}

TEST_CASE("commutant dimensions") {
  // N=1: everything commutes.
  CommutantReport r1 = commutant_dimension(WeightFamily(FamilyId::pochhammer, 1, Rational(1)), 4);
  CHECK(r1.dim_commutant == 1);

  CommutantReport r3 =
      commutant_dimension(WeightFamily(FamilyId::pochhammer, 3, Rational(3, 2)), 21);
  CHECK(r3.dim_commutant == 1);
  CHECK(r3.dim_star_space == 1);

  CHECK_THROWS_AS(commutant_dimension(WeightFamily(FamilyId::pochhammer, 3, Rational(1)), 4),
                  InvalidParameters);
}

TEST_CASE("flat family with C=0 matches pochhammer in the gauge") {
  WeightFamily flat0(FamilyId::flat, 3, Rational(3, 2), Rational(1), Rational(2), Rational(0));
  WeightFamily poch(FamilyId::pochhammer, 3, Rational(3, 2));
  CHECK(gauged_weight(flat0).poly_part == gauged_weight(poch).poly_part);
}

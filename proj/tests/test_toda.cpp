#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mvhermite/quadrature.hpp"
#include "mvhermite/toda.hpp"

using namespace mvh;

namespace {

const WeightFamily kP21(FamilyId::pochhammer, 2, Rational(1));

std::vector<WeightFamily> points() {
  return {
      kP21,
      WeightFamily(FamilyId::gamma, 3, Rational(1), Rational(1)),
      WeightFamily(FamilyId::flat, 4, Rational(1, 2), Rational(1), Rational(1),
                   Rational(1, 2)),
  };
}

}  // namespace

TEST_CASE("closed form at t=0 is the static data") {
  for (const WeightFamily& fam : points()) {
    TodaClosedForm cf = toda_closed_form(fam, 0, 3);
    MVOPSequence seq = mvop_by_recurrence(fam, 0, 3);
    for (int n = 0; n <= 3; ++n) {
      CHECK(evaluate_t(cf.Bn[n], Rational(0)) == seq.Bn[n]);
      CHECK(evaluate_t(cf.Cn[n], Rational(0)) == seq.Cn[n]);
    }
  }
}

TEST_CASE("scalar lattice solution") {
  // N=1: B_n(t) = -t/2, C_n = n/2, both residuals vanish term by term.
  WeightFamily one(FamilyId::pochhammer, 1, Rational(1));
  TodaClosedForm cf = toda_closed_form(one, 0, 4);
  for (int n = 0; n <= 4; ++n) {
    TPoly b = cf.Bn[n](0, 0);
    CHECK(b.coeff(0) == Rational(0));
    CHECK(b.coeff(1) == Rational(-1, 2));
    CHECK(cf.Cn[n](0, 0) == TPoly(Rational(n, 2)));
  }
  TodaResiduals res = toda_residuals(one, 0, 4);
  for (const TMatrix& r : res.b_residuals) CHECK(tmatrix_is_zero(r));
  for (const TMatrix& r : res.c_residuals) CHECK(tmatrix_is_zero(r));
}

TEST_CASE("lattice residuals vanish identically") {
  for (const WeightFamily& fam : points()) {
    TodaResiduals res = toda_residuals(fam, 0, 3);
    for (const TMatrix& r : res.b_residuals) CHECK(tmatrix_is_zero(r));
    for (const TMatrix& r : res.c_residuals) CHECK(tmatrix_is_zero(r));
  }
}

TEST_CASE("degree bound from nilpotency") {
  // N=2: C_1(t) entries are polynomials in t of degree <= 2.
  TodaClosedForm cf = toda_closed_form(kP21, 0, 2);
  long deg = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) deg = std::max(deg, cf.Cn[1](i, j).degree());
  CHECK(deg <= 2);
}

TEST_CASE("spectrum is preserved along the flow") {
  for (const WeightFamily& fam : points()) {
    TodaClosedForm cf = toda_closed_form(fam, 0, 3);
    MVOPSequence seq = mvop_by_recurrence(fam, 0, 3);
    for (int n = 1; n <= 3; ++n)
      CHECK(char_poly(cf.Cn[n]) == char_poly_constant(seq.Cn[n]));
  }
}

TEST_CASE("deformed polynomials stay monic and reduce at t=0") {
  for (const WeightFamily& fam : points())
    for (int n = 0; n <= 3; ++n) {
      CHECK(toda_deformed_poly(fam, 0, n, Rational(0)) ==
            mvop_by_recurrence(fam, 0, n).polys[n]);
      RMatPoly def = toda_deformed_poly(fam, 0, n, Rational(1));
      CHECK(def.degree() == n);
      CHECK(def.leading_coeff() == RMatrix::identity(fam.N()));
    }
}

TEST_CASE("expansion identity at rational t") {
  for (const WeightFamily& fam : points())
    for (int n = 1; n <= 3; ++n)
      for (const Rational& t : {Rational(1), Rational(-1, 2)}) {
        INFO(family_name(fam.id()) << " n=" << n);
        CHECK(toda_expansion_residual(fam, 0, n, t).is_zero_poly());
      }
  // t = 0: M_n(0) = G_n^{-1} and the identity collapses to P_n = P_n.
  CHECK(toda_Mn(kP21, 0, 2, Rational(0)) == inverse(g_prefactor(kP21, 0, 2)));
  CHECK(toda_expansion_residual(kP21, 0, 2, Rational(0)).is_zero_poly());
}

TEST_CASE("time derivative identity") {
  for (const WeightFamily& fam : points())
    for (int n = 1; n <= 3; ++n)
      CHECK(toda_timederivative_residual(fam, 0, n).is_zero_poly());
  // n=1: dP_1/dt = dX_1/dt (P_0 = I).
  BivarMatPoly p1 = toda_deformed_bivariate(kP21, 0, 1);
  CHECK(t_derivative(p1).coeff(0) == t_derivative(p1.coeff(0)));
}

TEST_CASE("simplified time-derivative identity at sampled t") {
  for (const WeightFamily& fam : points())
    for (int n = 1; n <= 3; ++n)
      for (const Rational& t : {Rational(1), Rational(-1, 2)})
        CHECK(toda_simplified_identity_residual(fam, 0, n, t).is_zero_poly());
}

TEST_CASE("rk4 integration against the closed form") {
  WeightFamily fam(FamilyId::pochhammer, 3, Rational(1));
  const int nmax = 3;
  TodaClosedForm cf = toda_closed_form(fam, 0, nmax);
  TodaNumericState init = closed_form_numeric(cf, nmax, 0.0);

  TodaNumericState end = toda_integrate(cf, nmax, init, 1.0, 1e-3);
  CHECK(max_state_deviation(end, closed_form_numeric(cf, nmax, 1.0)) < 1e-6);

  // Halving the step divides the error by about 16.
  double e1 = max_state_deviation(toda_integrate(cf, nmax, init, 1.0, 0.1),
                                  closed_form_numeric(cf, nmax, 1.0));
  double e2 = max_state_deviation(toda_integrate(cf, nmax, init, 1.0, 0.05),
                                  closed_form_numeric(cf, nmax, 1.0));
  double order = std::log2(e1 / e2);
  CHECK(order > 3.7);
  CHECK(order < 4.3);
}

TEST_CASE("scalar case integrates to machine precision") {
  WeightFamily one(FamilyId::pochhammer, 1, Rational(1));
  TodaClosedForm cf = toda_closed_form(one, 0, 3);
  TodaNumericState init = closed_form_numeric(cf, 3, 0.0);
  TodaNumericState end = toda_integrate(cf, 3, init, 1.0, 1e-2);
  CHECK(max_state_deviation(end, closed_form_numeric(cf, 3, 1.0)) < 1e-13);
}

TEST_CASE("deformed orthogonality under the tilted weight") {
  QuadratureRule rule = gauss_hermite(80);
  WeightFamily fam = kP21;
  DMatPoly wp = convert_matrix_poly<double, Rational>(gauged_weight(fam).poly_part);
  const Rational t(1, 2);
  std::vector<DMatPoly> defs;
  for (int n = 0; n <= 3; ++n)
    defs.push_back(
        convert_matrix_poly<double, Rational>(toda_deformed_poly(fam, 0, n, t)));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m < n; ++m)
      CHECK(max_abs(inner_product(defs[n], defs[m], wp, rule, t.get_d())) < 1e-9);
}

TEST_CASE("overflow guard") {
  TodaClosedForm cf = toda_closed_form(kP21, 0, 1);
  TodaNumericState bad = closed_form_numeric(cf, 1, 0.0);
  bad.B[0](0, 0) = 1e13;
  CHECK_THROWS_AS(toda_integrate(cf, 1, bad, 1.0, 0.5), StepRejected);
}

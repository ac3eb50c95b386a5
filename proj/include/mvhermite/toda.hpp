#pragma once

#include "mvhermite/mvops.hpp"

namespace mvh {

// Time-dependent objects live over Q[t]: conjugation by exp(+-tA/2) is a
// matrix polynomial in t because A is nilpotent, so every lattice residual
// below is a literal polynomial identity, not a sampled check.
using TPoly = Polynomial<Rational>;
using TMatrix = Matrix<TPoly>;
using BivarMatPoly = MatrixPolynomial<TPoly>;  // polynomial in x over Q[t]

// exp(c t A) as a matrix over Q[t].
TMatrix exp_tA(const RMatrix& A, const Rational& c);
// exp(c A) at a rational point.
RMatrix exp_A_at(const RMatrix& A, const Rational& c);

// Closed-form lattice solution: C_n(t) = e^{-tA/2} C_n e^{tA/2},
// B_n(t) = e^{-tA/2} B_n e^{tA/2} - t/2. Entries indexed 0..nmax+1 so the
// top boundary equation has its C_{nmax+1}.
struct TodaClosedForm {
  WeightFamily family;
  int shift = 0;
  std::vector<TMatrix> Bn;
  std::vector<TMatrix> Cn;
};

TodaClosedForm toda_closed_form(const WeightFamily& fam, int shift, int nmax);

// Lattice residuals (must be identically zero):
//   dB_n/dt - (C_n - C_{n+1})        for n = 0..nmax,
//   dC_n/dt - (C_n B_{n-1} - B_n C_n) for n = 1..nmax.
struct TodaResiduals {
  std::vector<TMatrix> b_residuals;
  std::vector<TMatrix> c_residuals;
};
TodaResiduals toda_residuals(const WeightFamily& fam, int shift, int nmax);

bool tmatrix_is_zero(const TMatrix& m);

// Characteristic polynomial coefficients over Q[t] (Faddeev-LeVerrier);
// index k holds the coefficient of lambda^{dim-k}.
std::vector<TPoly> char_poly(const TMatrix& m);
std::vector<TPoly> char_poly_constant(const RMatrix& m);

// Numeric lattice state for the RK4 cross-check. B has entries 0..nmax,
// C has entries 0..nmax with C[0] = 0.
struct TodaNumericState {
  double t = 0.0;
  std::vector<DMatrix> B;
  std::vector<DMatrix> C;
};

TodaNumericState closed_form_numeric(const TodaClosedForm& cf, int nmax,
                                     double t);

// Classical fixed-step RK4 on the coupled matrix system with Lambda = I;
// the top equation's C_{nmax+1}(t) comes from the closed form. Throws
// StepRejected if the state blows past the overflow guard.
TodaNumericState toda_integrate(const TodaClosedForm& cf, int nmax,
                                TodaNumericState initial, double t_end,
                                double h);

double max_state_deviation(const TodaNumericState& a, const TodaNumericState& b);

// Deformed monic polynomial at rational t:
// exp(-tA/2) P_n(x + t/2) exp(tA/2).
RMatPoly toda_deformed_poly(const WeightFamily& fam, int shift, int n,
                            const Rational& t);

// The same object with t kept symbolic.
BivarMatPoly toda_deformed_bivariate(const WeightFamily& fam, int shift, int n);

// d/dt entrywise.
BivarMatPoly t_derivative(const BivarMatPoly& p);
TMatrix t_derivative(const TMatrix& m);

// Evaluate the t variable at a rational point.
RMatPoly evaluate_t(const BivarMatPoly& p, const Rational& t);
RMatrix evaluate_t(const TMatrix& m, const Rational& t);

// Lower-triangular leading-coefficient matrix M_n(t) of the raising-chain
// expansion, at rational t.
RMatrix toda_Mn(const WeightFamily& fam, int shift, int n, const Rational& t);

// Residual of the two descriptions of the deformed polynomials at rational t:
// deformed P_n minus M_n(t)^{-1} sum_k C(n,k)(-t)^k G^{-1} P_{n-k} (Phi..)^T.
RMatPoly toda_expansion_residual(const WeightFamily& fam, int shift, int n,
                                 const Rational& t);

// Residual of dP_n/dt = (dX_n/dt) P_{n-1} (X_n the one-but-leading
// coefficient of the deformed polynomial), as a bivariate identity.
BivarMatPoly toda_timederivative_residual(const WeightFamily& fam, int shift,
                                          int n);

// Residual of the simplified time-derivative identity at rational t:
// n P_{n-1}^{(nu+1)}(x+t/2) + [P_n(x+t/2), A]
//   - 2 e^{tA/2} (dX_n/dt)(t) e^{-tA/2} P_{n-1}(x+t/2).
RMatPoly toda_simplified_identity_residual(const WeightFamily& fam, int shift,
                                           int n, const Rational& t);

}  // namespace mvh

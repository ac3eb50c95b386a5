#pragma once

#include <string>
#include <vector>

#include "mvhermite/weight.hpp"

namespace mvh {

using RDiffOp = RightDiffOp<Rational>;

// D: F2 = I, F1 = -2x + 2A, F0 = -2J (gauged). Symmetric for every family;
// eigenvalues P_n D = (-2n - 2J) P_n do not depend on the parameters.
RDiffOp operator_D(int N);

// Second operator built from the Pearson pair: F2 = Phi^T, F1 = Psi^T.
// Eigenvalues P_n = n K P_n; commutes with D.
RDiffOp operator_script_D(const WeightFamily& fam, int shift = 0);

// Darboux companion (raising then lowering): F2 = Phi^T,
// F1 = (Phi')^T + Psi^T, F0 = (Psi')^T; acts on the nu+1 polynomials with
// eigenvalue (n+1) K^{(nu)}.
RDiffOp darboux_operator(const WeightFamily& fam, int shift = 0);

// Eigenvalue matrices.
RMatrix eigenvalue_D(int N, int n);                                  // -2n - 2J
RMatrix eigenvalue_script_D(const WeightFamily& fam, int shift, int n);  // n K

struct SymmetryReport {
  std::string condition;
  bool pass = false;
  RMatPoly residual;       // exact algebraic residual (zero iff pass)
  double boundary = 0.0;   // numeric boundary spot check at x = +-20
};

// The three algebraic symmetry conditions of a right operator against the
// gauged weight (the Gaussian factor cancels symbolically), plus the decay
// boundary conditions checked numerically.
std::vector<SymmetryReport> symmetry_conditions_check(const GaugedWeight& gw,
                                                      const RDiffOp& op);

// Residual of [opA, opB] applied to the module basis x^k E_ij, k <= deg_cap.
// Returns true when every residual vanishes exactly.
bool operators_commute_on_basis(const RDiffOp& a, const RDiffOp& b, int N,
                                int deg_cap = 10);

// Conjugation residuals moving a right operator through L:
// F2 L = L Ft2, F1 L = 2 L' Ft2 + L Ft1, F0 L = L'' Ft2 + L' Ft1 + L Ft0
// for the diagonal companion (Ft2, Ft1, Ft0) = (I, -2x, -2J).
std::vector<RMatPoly> conjugation_residuals(const RDiffOp& op, int N);

}  // namespace mvh

#pragma once

#include <vector>

#include "mvhermite/weight.hpp"

namespace mvh {

// One family's monic orthogonal polynomials (gauged, exact) together with
// the attached recurrence data. polys[n] is monic of degree n, norms[n] is
// the diagonal of <P_n, P_n> (rational multiples of sqrt(pi)), Cn[n] is
// diagonal positive, Bn[n] is tridiagonal with zero diagonal.
struct MVOPSequence {
  WeightFamily family;
  int shift = 0;
  std::vector<RMatPoly> polys;
  std::vector<std::vector<PiScalar>> norms;
  std::vector<RMatrix> Bn;
  std::vector<RMatrix> Cn;  // Cn[0] unused (zero matrix)
};

// K = lc(Psi)^T = 2(d(J - N - 1) - c): diagonal, strictly negative entries.
RMatrix ladder_K(const WeightFamily& fam, int shift = 0);

// G_n = K^{(nu)}^{-1} ... K^{(nu+n-1)}^{-1}, the Rodrigues prefactor.
RMatrix g_prefactor(const WeightFamily& fam, int shift, int n);

// Closed-form squared norm H_n = (-1)^n n! G_n H_0^{(nu+n)}, with the
// unit-ratio product restoring the dropped family unit.
std::vector<PiScalar> norm_H(const WeightFamily& fam, int shift, int n);

// One-but-leading coefficient X_n = n (K^{(nu+n-1)})^{-1} Psi^{(nu+n-1)}(0)^T.
RMatrix x_coefficient(const WeightFamily& fam, int shift, int n);

// Recurrence coefficients from the ladder data.
RMatrix recurrence_B(const WeightFamily& fam, int shift, int n);
RMatrix recurrence_C(const WeightFamily& fam, int shift, int n);

// Route 1 (the oracle): exact moments of the gauged weight and a block
// Hankel solve for each monic polynomial. Norms from <P_n, x^n I>.
MVOPSequence mvop_by_gram_schmidt(const WeightFamily& fam, int shift, int nmax);

// Route 2: closed-form B_n, C_n, H_n and the three-term recurrence.
MVOPSequence mvop_by_recurrence(const WeightFamily& fam, int shift, int nmax);

// Route 3: entrywise formula, a dual-Hahn 3F2 sum against products
// H_{n+r-s}(x) i^{s-t} H_{s-t}(ix).
RMatPoly mvop_by_explicit_entries(const WeightFamily& fam, int shift, int n);

// Route 4: Rodrigues formula. The weighted derivative iterates
// Q -> Q' - 2xQ on the shifted weight, and the inverse weight is the exact
// polynomial (L^-1)^T Delta^-1 L^-1. Throws NonPolynomialResult if the
// product fails to be monic of degree n.
RMatPoly mvop_by_rodrigues(const WeightFamily& fam, int shift, int n);

// Lowering ladder residual: dP_n/dx - n P_{n-1}^{(nu+1)}.
RMatPoly shift_down_residual(const WeightFamily& fam, int shift, int n);

// Raising ladder residual: P_{n-1}^{(nu+1)} S^{(nu)} - K^{(nu)} P_n^{(nu)}
// with (Q S^{(nu)}) = Q' Phi^T + Q Psi^T.
RMatPoly shift_up_residual(const WeightFamily& fam, int shift, int n);

// Connection coefficients A_k with P_n^{(nu)} = sum_k A_k P_{n-k}^{(lambda)},
// computed by exact downward elimination in the monic basis. A_0 = I and
// A_k is supported on the k-th superdiagonal.
std::vector<RMatrix> connection_coefficients(const WeightFamily& fam,
                                             const Rational& to_nu, int n);

// Closed-form connection coefficient (entry on the k-th superdiagonal),
// the Hahn-connection product formula normalized for the gauged monic
// polynomials. Row r is 1-based.
Rational connection_coefficient_formula(const WeightFamily& fam,
                                        const Rational& to_nu, int n, int k,
                                        int r);

// Degree-overflow sum that must vanish for r > t:
// sum_s (-1)^{s-t} (N-s+1)_{s-1}/(s-t)! 3F2(...) = 0.
Rational vanishing_sum(const WeightFamily& fam, int shift, int n, int r, int t);

// The printed closed form for C_n (as published); kept for the constant
// audit against the derived H_n H_{n-1}^{-1} route.
RMatrix recurrence_C_printed(const WeightFamily& fam, int shift, int n);

// Dual-Hahn three-term recurrence residual for the 3F2 entry coefficients:
// zero for all s = 1..N.
Rational dual_hahn_recurrence_residual(const Rational& gamma, int N, int n,
                                       int r, int s);

}  // namespace mvh

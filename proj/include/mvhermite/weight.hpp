#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvhermite/matrix_polynomial.hpp"

namespace mvh {

using RMatrix = Matrix<Rational>;
using RMatPoly = MatrixPolynomial<Rational>;
using DMatrix = Matrix<double>;
using DMatPoly = MatrixPolynomial<double>;

enum class FamilyId { pochhammer, gamma, flat };

std::string family_name(FamilyId id);
FamilyId family_from_name(const std::string& name);

// One admissible parameter family of Hermite-type matrix weights
//   W(x) = e^{-x^2} L(x) Delta L(x)^T  (alpha-conjugated),
// held in the alpha-gauge: only alpha_k^2 and unit-normalized delta_k enter,
// so every stored quantity is rational. Cross-shift identities for the gamma
// and flat families carry an explicit unit_ratio factor, since the global
// positive unit (e.g. lambda^nu Gamma(nu)) is dropped from storage.
class WeightFamily {
 public:
  WeightFamily(FamilyId id, int N, Rational nu, Rational lambda = Rational(1),
               Rational rho = Rational(1), Rational Cshift = Rational(0));

  FamilyId id() const { return id_; }
  int N() const { return N_; }
  const Rational& nu() const { return nu_; }
  const Rational& lambda() const { return lambda_; }
  const Rational& rho() const { return rho_; }
  const Rational& Cshift() const { return C_; }

  // Throws InvalidParameters naming the violated positivity constraint.
  void validate(int max_shift = 0) const;

  WeightFamily at_nu(const Rational& new_nu) const;

  // Pearson coefficients at nu + shift: delta_k^{(nu+1)} = (d k + c) delta_k.
  Rational c(int shift) const;
  Rational d(int shift) const;
  // gamma = c/d; the gauged polynomials depend on the family only through it.
  Rational gamma_ratio(int shift) const;

  // Unit-normalized diagonal weight entries and the squared gauge factors.
  Rational delta_hat(int k, int shift) const;  // k = 1..N
  Rational alpha_sq(int k) const;              // k = 1..N
  // delta_hat_k / alpha_k^2, the diagonal of the gauged LDL^T factorization.
  Rational delta_gauged(int k, int shift) const;

  // unit(nu+shift+1)/unit(nu+shift), and the product over `count` steps.
  Rational unit_ratio(int shift) const;
  Rational unit_ratio_prod(int shift, int count) const;

 private:
  FamilyId id_;
  int N_;
  Rational nu_, lambda_, rho_, C_;
};

// Unipotent lower-triangular Toeplitz matrix with entries H_{m-n}(x)/(m-n)!.
RMatPoly build_L(int N);
// Its exact inverse, filled with i^{m-n} H_{m-n}(ix)/(m-n)!.
RMatPoly build_L_inverse(int N);

// A = 2 sum_j E_{j,j-1}; satisfies dL/dx = A L = L A.
RMatrix matrix_A(int N);
// J = diag(1, ..., N).
RMatrix matrix_J(int N);

// Polynomial part of the gauged weight: P(x) = L(x) Delta_gauged L(x)^T,
// symmetric with constant determinant.
struct GaugedWeight {
  WeightFamily family;
  int shift = 0;
  RMatPoly poly_part;
};

GaugedWeight gauged_weight(const WeightFamily& fam, int shift = 0);

// Entry (m,n) of the gauged weight expanded in the Hermite basis:
// coefficients of H_{m+n-2t} for t = 1..min(m,n). Indices are 1-based.
std::vector<std::pair<long, Rational>> weight_entry_closed_form(
    const WeightFamily& fam, int m, int n, int shift = 0);

// Gauged zeroth moment: diagonal, entries rational multiples of sqrt(pi).
std::vector<PiScalar> zeroth_moment(const WeightFamily& fam, int shift = 0);

// Gauged Pearson pair. Phi = d(J + (A^T)^2/2 - x A^T) + c satisfies
//   P^{(nu+1)} * unit_ratio = P^{(nu)} Phi,
// and Psi (degree one, leading coefficient 2(d(J-N-1)-c)) satisfies
//   (dP^{(nu+1)}/dx - 2x P^{(nu+1)}) * unit_ratio = P^{(nu)} Psi.
RMatPoly pearson_phi(const WeightFamily& fam, int shift = 0);
RMatPoly pearson_psi(const WeightFamily& fam, int shift = 0);
// Leading coefficient of Psi as a diagonal matrix (all entries negative).
RMatrix pearson_psi_lc(const WeightFamily& fam, int shift = 0);
// Psi(0): tridiagonal with zero diagonal.
RMatrix pearson_psi_at0(const WeightFamily& fam, int shift = 0);

// Numeric dimensions of the commutant spaces
//   A_W = {Y : Y W(x) = W(x) Y} and script-A_W = {Y : Y W(x) = W(x) Y^T}
// from the rank of the stacked sample system (tolerance on singular values).
struct CommutantReport {
  int dim_commutant;
  int dim_star_space;
};
CommutantReport commutant_dimension(const WeightFamily& fam, int sample_count,
                                    double tol = 1e-8);

// Positive-definiteness spot check of the gauged weight at a sample point:
// all leading principal minors positive, computed exactly.
bool positive_definite_at(const GaugedWeight& gw, const Rational& x);

}  // namespace mvh

#include "mvhermite/diffops.hpp"

#include <cmath>

#include "mvhermite/mvops.hpp"

namespace mvh {

RDiffOp operator_D(int N) {
  RMatPoly f1(matrix_A(N).scale(Rational(2)));
  f1.set_coeff(1, RMatrix::identity(N).scale(Rational(-2)));
  return RDiffOp{RMatPoly::identity(N), f1,
                 RMatPoly(matrix_J(N).scale(Rational(-2)))};
}

RDiffOp operator_script_D(const WeightFamily& fam, int shift) {
  return RDiffOp{pearson_phi(fam, shift).transpose_coeffs(),
                 pearson_psi(fam, shift).transpose_coeffs(),
                 RMatPoly(fam.N())};
}

RDiffOp darboux_operator(const WeightFamily& fam, int shift) {
  RMatPoly phiT = pearson_phi(fam, shift).transpose_coeffs();
  RMatPoly psiT = pearson_psi(fam, shift).transpose_coeffs();
  return RDiffOp{phiT, phiT.derivative() + psiT, psiT.derivative()};
}

RMatrix eigenvalue_D(int N, int n) {
  return -(matrix_J(N).scale(Rational(2)) + RMatrix::identity(N).scale(Rational(2 * n)));
}

RMatrix eigenvalue_script_D(const WeightFamily& fam, int shift, int n) {
  return ladder_K(fam, shift).scale(Rational(n));
}

namespace {

// Weighted derivative: Q -> Q' - 2xQ, i.e. (e^{-x^2} Q)' = e^{-x^2} (Q' - 2xQ).
RMatPoly wderiv(const RMatPoly& q) {
  RMatPoly x_id = RMatPoly::monomial(RMatrix::identity(q.dim()), 1);
  return q.derivative() - x_id * q * Rational(2);
}

double boundary_norm(const RMatPoly& m, double x) {
  DMatrix v = convert_matrix_poly<double, Rational>(m).evaluate(x);
  return max_abs(v) * std::exp(-x * x);
}

}  // namespace

std::vector<SymmetryReport> symmetry_conditions_check(const GaugedWeight& gw,
                                                      const RDiffOp& op) {
  const RMatPoly& w = gw.poly_part;
  RMatPoly f2w = op.F2 * w;
  RMatPoly f1w = op.F1 * w;
  RMatPoly f0w = op.F0 * w;

  std::vector<SymmetryReport> out;

  {
    SymmetryReport r;
    r.condition = "symmetry-1";
    r.residual = f2w - f2w.transpose_coeffs();
    r.pass = r.residual.is_zero_poly();
    out.push_back(std::move(r));
  }
  {
    SymmetryReport r;
    r.condition = "symmetry-2";
    r.residual = wderiv(f2w) * Rational(2) - f1w - f1w.transpose_coeffs();
    r.pass = r.residual.is_zero_poly();
    out.push_back(std::move(r));
  }
  {
    SymmetryReport r;
    r.condition = "symmetry-3";
    r.residual = wderiv(wderiv(f2w)) - wderiv(f1w) + f0w - f0w.transpose_coeffs();
    r.pass = r.residual.is_zero_poly();
    out.push_back(std::move(r));
  }
  {
    // lim F2 W = 0 and lim F1 W - (F2 W)' = 0: polynomial times Gaussian.
    SymmetryReport r;
    r.condition = "boundary";
    RMatPoly drop = f1w - wderiv(f2w);
    double b = 0.0;
    for (double x : {-20.0, 20.0})
      b = std::max({b, boundary_norm(f2w, x), boundary_norm(drop, x)});
    r.boundary = b;
    r.pass = b < 1e-12;
    out.push_back(std::move(r));
  }
  return out;
}

bool operators_commute_on_basis(const RDiffOp& a, const RDiffOp& b, int N,
                                int deg_cap) {
  for (int k = 0; k <= deg_cap; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        RMatrix e(N);
        e(i, j) = 1;
        RMatPoly q = RMatPoly::monomial(std::move(e), k);
        RMatPoly ab = apply_right_diffop(apply_right_diffop(q, a), b);
        RMatPoly ba = apply_right_diffop(apply_right_diffop(q, b), a);
        if (ab != ba) return false;
      }
  return true;
}

std::vector<RMatPoly> conjugation_residuals(const RDiffOp& op, int N) {
  RMatPoly L = build_L(N);
  RMatPoly dL = L.derivative();
  RMatPoly x_id = RMatPoly::monomial(RMatrix::identity(N), 1);
  RMatPoly ft2 = RMatPoly::identity(N);
  RMatPoly ft1 = x_id * Rational(-2);
  RMatPoly ft0(matrix_J(N).scale(Rational(-2)));
  std::vector<RMatPoly> res;
  res.push_back(op.F2 * L - L * ft2);
  res.push_back(op.F1 * L - dL * ft2 * Rational(2) - L * ft1);
  res.push_back(op.F0 * L - dL.derivative() * ft2 - dL * ft1 - L * ft0);
  return res;
}

}  // namespace mvh

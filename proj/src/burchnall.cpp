#include "mvhermite/burchnall.hpp"

#include <cmath>

namespace mvh {

RMatPoly apply_raising(const RMatPoly& q, const WeightFamily& fam, int shift) {
  RMatPoly phiT = pearson_phi(fam, shift).transpose_coeffs();
  RMatPoly psiT = pearson_psi(fam, shift).transpose_coeffs();
  return q.derivative() * phiT + q * psiT;
}

RMatPoly iterated_raising(RMatPoly q, const WeightFamily& fam, int shift, int n) {
  RaisingChain chain(fam, shift, n);
  for (int j = n - 1; j >= 0; --j)
    q = q.derivative() * chain.phi(j).transpose_coeffs() + q * chain.psi_T(j);
  return q;
}

RMatPoly phi_product(const WeightFamily& fam, int shift, int k) {
  RMatPoly prod = RMatPoly::identity(fam.N());
  for (int j = 0; j < k; ++j) prod = prod * pearson_phi(fam, shift + j);
  return prod;
}

RaisingChain::RaisingChain(WeightFamily fam, int shift, int length)
    : family_(std::move(fam)), shift_(shift), length_(length) {
  phi_prod_.push_back(RMatPoly::identity(family_.N()));
  for (int k = 0; k < length_; ++k) {
    phi_.push_back(pearson_phi(family_, shift_ + k));
    psi_t_.push_back(pearson_psi(family_, shift_ + k).transpose_coeffs());
    k_.push_back(ladder_K(family_, shift_ + k));
    phi_prod_.push_back(phi_prod_.back() * phi_.back());
  }
}

RMatrix RaisingChain::g_prefactor(int k, int m) const {
  const int N = family_.N();
  RMatrix g = RMatrix::identity(N);
  for (int j = 0; j < m; ++j) {
    const RMatrix& kk = k_.at(k + j);
    for (int i = 0; i < N; ++i) g(i, i) /= kk(i, i);
  }
  return g;
}

namespace {

RMatPoly monic_poly(const WeightFamily& fam, int shift, int n) {
  return mvop_by_recurrence(fam, shift, n).polys[n];
}

}  // namespace

RMatPoly burchnall_expand(const RMatPoly& q, const WeightFamily& fam, int shift,
                          int n) {
  const int N = fam.N();
  RaisingChain chain(fam, shift, n);
  RMatPoly sum(N);
  RMatPoly qk = q;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) qk = qk.derivative();
    if (qk.is_zero_poly()) break;
    RMatrix ginv = inverse(chain.g_prefactor(k, n - k));
    RMatPoly term = qk * monic_poly(fam, shift + k, n - k).left_mul(ginv) *
                    chain.phi_product(k).transpose_coeffs();
    sum = sum + term * Rational(binomial(n, k));
  }
  return sum;
}

RMatPoly burchnall_product_residual(const WeightFamily& fam, int shift, int n,
                                    int m) {
  const int N = fam.N();
  RMatrix lhs_pref = g_prefactor(fam, shift + n, m) *
                     inverse(g_prefactor(fam, shift, n + m));
  RMatPoly lhs = monic_poly(fam, shift, n + m).left_mul(lhs_pref);

  RaisingChain chain(fam, shift, n);
  RMatPoly rhs(N);
  for (int k = 0; k <= std::min(n, m); ++k) {
    RMatrix ginv = inverse(chain.g_prefactor(k, n - k));
    RMatPoly term = monic_poly(fam, shift + n + k, m - k) *
                    monic_poly(fam, shift + k, n - k).left_mul(ginv) *
                    chain.phi_product(k).transpose_coeffs();
    Rational c = Rational(binomial(n, k)) * Rational(binomial(m, k)) *
                 Rational(factorial(k));
    rhs = rhs + term * c;
  }
  return lhs - rhs;
}

namespace {

// integral of L(x) W(x) R(x) e^{-x^2 - xt} dx by completing the square.
DMatrix quad_sandwich(const DMatPoly& left, const DMatPoly& wpoly,
                      const DMatPoly& right, double t,
                      const QuadratureRule& rule) {
  const int N = wpoly.dim();
  long needed = (left.degree() + wpoly.degree() + right.degree()) / 2 + 1;
  if (rule.size() < needed)
    throw UnderResolved("quadrature rule under-resolved for integrand degree");
  const double pref = std::exp(t * t / 4.0);
  DMatrix acc(N);
  for (int i = 0; i < rule.size(); ++i) {
    double x = rule.nodes[i] - t / 2.0;
    acc = acc + (left.evaluate(x) * wpoly.evaluate(x) * right.evaluate(x))
                    .scale(rule.weights[i] * pref);
  }
  return acc;
}

}  // namespace

double integrated_burchnall_residual(const WeightFamily& fam, int shift, int n,
                                     const ExpPoly& q, const ExpPoly& m,
                                     const QuadratureRule& rule) {
  const int N = fam.N();
  DMatPoly w_top =
      convert_matrix_poly<double, Rational>(gauged_weight(fam, shift + n).poly_part);
  DMatPoly w_base =
      convert_matrix_poly<double, Rational>(gauged_weight(fam, shift).poly_part);

  ExpPoly mn = m;
  for (int k = 0; k < n; ++k) mn = mn.derivative();

  // LHS: int Q W^{(nu+n)} M^{(n)}, exponential factors pooled into the node
  // shift, and the dropped family unit restored.
  DMatrix lhs = quad_sandwich(q.poly, w_top, mn.poly, q.exp_shift + mn.exp_shift, rule)
                    .scale(fam.unit_ratio_prod(shift, n).get_d());

  // RHS: (-1)^n int [sum_k C(n,k) Q^{(k)} G^{-1} P (Phi..)^T] W^{(nu)} M.
  RaisingChain chain(fam, shift, n);
  ExpPoly qk = q;
  DMatPoly bracket(N);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) qk = qk.derivative();
    RMatrix ginv = inverse(chain.g_prefactor(k, n - k));
    RMatPoly tail = monic_poly(fam, shift + k, n - k).left_mul(ginv) *
                    chain.phi_product(k).transpose_coeffs();
    bracket = bracket + (qk.poly * convert_matrix_poly<double, Rational>(tail))
                            .scale(binomial(n, k).get_d());
  }
  DMatrix rhs =
      quad_sandwich(bracket, w_base, m.poly, q.exp_shift + m.exp_shift, rule);
  if (n % 2 == 1) rhs = -rhs;
  return max_abs(lhs - rhs);
}

double integrated_special_case(const WeightFamily& fam, int shift, int n, int p,
                               const Rational& t, const QuadratureRule& rule) {
  const int N = fam.N();
  DMatPoly w_base =
      convert_matrix_poly<double, Rational>(gauged_weight(fam, shift).poly_part);
  RaisingChain chain(fam, shift, n);
  RMatPoly bracket(N);
  Rational tk(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) tk *= -t;
    RMatrix ginv = inverse(chain.g_prefactor(k, n - k));
    RMatPoly term = monic_poly(fam, shift + k, n - k).left_mul(ginv) *
                    chain.phi_product(k).transpose_coeffs();
    bracket = bracket + term * (tk * Rational(binomial(n, k)));
  }
  DMatPoly bd = convert_matrix_poly<double, Rational>(bracket);
  DMatPoly xp = DMatPoly::monomial(DMatrix::identity(N), p);
  return max_abs(quad_sandwich(bd, w_base, xp, t.get_d(), rule));
}

}  // namespace mvh

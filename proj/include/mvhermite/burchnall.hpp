#pragma once

#include "mvhermite/mvops.hpp"
#include "mvhermite/quadrature.hpp"

namespace mvh {

// One raising step: (Q S^{(nu+shift)}) = Q' Phi^T + Q Psi^T. Exact; equal to
// [d/dx (Q W^{(nu+1)})] W^{(nu)}^{-1} once the dropped family unit is
// restored by unit_ratio.
RMatPoly apply_raising(const RMatPoly& q, const WeightFamily& fam, int shift);

// Cached ladder data for an iterated raising chain S^{(nu+n-1)} ... S^{(nu)}:
// the Pearson pair at each shift, the ladder constants, and the left-to-right
// Phi products reused across the expansion terms.
class RaisingChain {
 public:
  RaisingChain(WeightFamily fam, int shift, int length);

  const WeightFamily& family() const { return family_; }
  int shift() const { return shift_; }
  int length() const { return length_; }

  const RMatPoly& phi(int k) const { return phi_.at(k); }
  const RMatPoly& psi_T(int k) const { return psi_t_.at(k); }
  const RMatrix& K(int k) const { return k_.at(k); }
  // Phi^{(nu)} ... Phi^{(nu+k-1)}, empty product for k = 0.
  const RMatPoly& phi_product(int k) const { return phi_prod_.at(k); }
  // G_m^{(nu+k)} = product of K^{-1} from shift+k over m steps.
  RMatrix g_prefactor(int k, int m) const;

 private:
  WeightFamily family_;
  int shift_;
  int length_;
  std::vector<RMatPoly> phi_, psi_t_, phi_prod_;
  std::vector<RMatrix> k_;
};

// Q S^{(nu+n-1)} ... S^{(nu+1)} S^{(nu)}.
RMatPoly iterated_raising(RMatPoly q, const WeightFamily& fam, int shift, int n);

// Phi^{(nu)} Phi^{(nu+1)} ... Phi^{(nu+k-1)}, left to right.
RMatPoly phi_product(const WeightFamily& fam, int shift, int k);

// Operational expansion of the iterated raising chain:
// sum_k C(n,k) Q^{(k)} (G_{n-k}^{(nu+k)})^{-1} P_{n-k}^{(nu+k)}
//       (Phi^{(nu)} ... Phi^{(nu+k-1)})^T.
RMatPoly burchnall_expand(const RMatPoly& q, const WeightFamily& fam, int shift,
                          int n);

// Product expansion residual:
// G_m^{(nu+n)} (G_{n+m}^{(nu)})^{-1} P_{n+m}^{(nu)}
//   - sum_k C(n,k) C(m,k) k! P_{m-k}^{(nu+n+k)} (G_{n-k}^{(nu+k)})^{-1}
//     P_{n-k}^{(nu+k)} (Phi ... Phi)^T; zero when the expansion holds.
RMatPoly burchnall_product_residual(const WeightFamily& fam, int shift, int n,
                                    int m);

// A polynomial times an exponential factor e^{-x t}.
struct ExpPoly {
  double exp_shift = 0.0;  // e^{-x * exp_shift}
  DMatPoly poly;

  ExpPoly derivative() const {
    return ExpPoly{exp_shift, poly.derivative() - poly.scale(exp_shift)};
  }
};

// Integrated expansion: max-entry residual of
// int Q W^{(nu+n)} M^{(n)} dx * unit_prod
//   = (-1)^n int sum_k C(n,k) Q^{(k)} (G_{n-k})^{-1} P_{n-k} (Phi...)^T
//             W^{(nu)} M dx
// evaluated by Gauss-Hermite quadrature (exponentials absorbed by node shift).
double integrated_burchnall_residual(const WeightFamily& fam, int shift, int n,
                                     const ExpPoly& q, const ExpPoly& m,
                                     const QuadratureRule& rule);

// Special case Q = e^{-xt} I, M = x^p I with p < n: the integral itself must
// vanish; returns its max entry.
double integrated_special_case(const WeightFamily& fam, int shift, int n, int p,
                               const Rational& t, const QuadratureRule& rule);

}  // namespace mvh

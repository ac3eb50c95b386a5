#pragma once

#include <functional>
#include <vector>

#include "mvhermite/weight.hpp"

namespace mvh {

// Gauss-Hermite rule for the weight e^{-x^2} on the real line.
// Nodes are exactly symmetric about 0 (mirror pairs share one weight), so
// odd integrands cancel exactly when summed pairwise.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }

  // Sums f over the rule, pairing each node with its mirror first.
  double integrate(const std::function<double(double)>& f) const;
};

// Golub-Welsch: eigen-decomposition of the Jacobi matrix of the monic
// Hermite recurrence by an implicit-shift QL sweep.
QuadratureRule gauss_hermite(int M);

// <P, Q> = integral of P(x) W(x) e^{-xt} Q(x)^T dx for the gauged weight
// polynomial part `wpoly` (so W(x) = e^{-x^2} wpoly(x)). The exponential
// factor is absorbed by completing the square: nodes shift by -t/2 and the
// result picks up e^{t^2/4}.
DMatrix inner_product(const DMatPoly& p, const DMatPoly& q,
                      const DMatPoly& wpoly, const QuadratureRule& rule,
                      double t = 0.0);

}  // namespace mvh

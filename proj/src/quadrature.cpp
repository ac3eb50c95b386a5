#include "mvhermite/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mvh {

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix, tracking the first
// component of each eigenvector. d: diagonal, e: off-diagonal (e[0] unused
// convention avoided; e has size n, e[n-1] ignored), z: first-row tracking.
void imtqlx(std::vector<double>& d, std::vector<double>& e,
            std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e[n - 1] = 0.0;
  const double prec = 2.22e-16;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= prec * dd) break;
      }
      if (m == l) break;
      if (++iter > 50) throw EigenFailure("tridiagonal QL did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  // Sort ascending by node, carrying z along.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(n), zs(n);
  for (int i = 0; i < n; ++i) {
    ds[i] = d[idx[i]];
    zs[i] = z[idx[i]];
  }
  d = std::move(ds);
  z = std::move(zs);
}

}  // namespace

QuadratureRule gauss_hermite(int M) {
  if (M < 1) throw InvalidParameters("quadrature needs at least one node");
  std::vector<double> d(M, 0.0), e(M, 0.0), z(M, 0.0);
  for (int k = 1; k < M; ++k) e[k - 1] = std::sqrt(k / 2.0);
  z[0] = 1.0;
  imtqlx(d, e, z);

  const double mu0 = std::sqrt(std::numbers::pi);
  QuadratureRule rule;
  rule.nodes = d;
  rule.weights.resize(M);
  for (int i = 0; i < M; ++i) rule.weights[i] = mu0 * z[i] * z[i];

  // Enforce exact mirror symmetry so odd moments cancel in pairs.
  for (int i = 0; i < M / 2; ++i) {
    int j = M - 1 - i;
    double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (M % 2 == 1) rule.nodes[M / 2] = 0.0;
  return rule;
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  const int M = size();
  double sum = 0.0;
  for (int i = 0; i < M / 2; ++i) {
    int j = M - 1 - i;
    sum += weights[i] * f(nodes[i]) + weights[j] * f(nodes[j]);
  }
  if (M % 2 == 1) sum += weights[M / 2] * f(nodes[M / 2]);
  return sum;
}

DMatrix inner_product(const DMatPoly& p, const DMatPoly& q,
                      const DMatPoly& wpoly, const QuadratureRule& rule,
                      double t) {
  const int N = wpoly.dim();
  long needed = (p.degree() + q.degree() + wpoly.degree()) / 2 + 1;
  if (rule.size() < needed)
    throw UnderResolved("quadrature rule under-resolved for integrand degree");
  const double pref = std::exp(t * t / 4.0);
  DMatrix acc(N);
  for (int i = 0; i < rule.size(); ++i) {
    double x = rule.nodes[i] - t / 2.0;
    DMatrix val = p.evaluate(x) * wpoly.evaluate(x) * q.evaluate(x).transpose();
    acc = acc + val.scale(rule.weights[i] * pref);
  }
  return acc;
}

}  // namespace mvh

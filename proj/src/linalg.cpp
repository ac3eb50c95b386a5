#include "mvhermite/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace mvh {

void gauss_solve(std::vector<std::vector<Rational>>& a,
                 std::vector<std::vector<Rational>>& b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) throw SingularSystem("singular linear system");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    const Rational d = a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] /= d;
    for (auto& x : b[col]) x /= d;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      const Rational f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      for (size_t j = 0; j < b[r].size(); ++j) b[r][j] -= f * b[col][j];
    }
  }
}

std::vector<double> singular_values(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  const size_t m = rows.size();
  const size_t n = rows[0].size();
  // One-sided Jacobi on columns of A (column-major copy).
  std::vector<std::vector<double>> col(n, std::vector<double>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) col[j][i] = rows[i][j];

  auto dot = [&](size_t p, size_t q) {
    double s = 0;
    for (size_t i = 0; i < m; ++i) s += col[p][i] * col[q][i];
    return s;
  };

  const double eps = 1e-15;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (size_t p = 0; p + 1 < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        double app = dot(p, p), aqq = dot(q, q), apq = dot(p, q);
        if (std::abs(apq) <= eps * std::sqrt(app * aqq) || apq == 0.0) continue;
        off += std::abs(apq);
        double tau = (aqq - app) / (2 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1 + tau * tau));
        double c = 1 / std::sqrt(1 + t * t);
        double s = c * t;
        for (size_t i = 0; i < m; ++i) {
          double vp = col[p][i], vq = col[q][i];
          col[p][i] = c * vp - s * vq;
          col[q][i] = s * vp + c * vq;
        }
      }
    if (off == 0) break;
  }

  std::vector<double> sv(n);
  for (size_t j = 0; j < n; ++j) sv[j] = std::sqrt(dot(j, j));
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

int nullspace_dimension(const std::vector<std::vector<double>>& rows, int cols,
                        double tol) {
  if (rows.empty()) return cols;
  std::vector<double> sv = singular_values(rows);
  double smax = sv.empty() ? 0.0 : sv.front();
  if (smax == 0.0) return cols;
  int dim = 0;
  for (double s : sv)
    if (s <= tol * smax) ++dim;
  return dim;
}

}  // namespace mvh

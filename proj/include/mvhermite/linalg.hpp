#pragma once

#include <vector>

#include "mvhermite/matrix.hpp"

namespace mvh {

// Solves A X = B exactly in place, A n-by-n, B n-by-m (both row-major).
// Throws SingularSystem if A is singular.
void gauss_solve(std::vector<std::vector<Rational>>& a,
                 std::vector<std::vector<Rational>>& b);

// Singular values of a rectangular row-major matrix (rows >= cols not
// required), via one-sided Jacobi. Descending order.
std::vector<double> singular_values(const std::vector<std::vector<double>>& rows);

// Dimension of the null space of the stacked system, counting singular
// values below tol * sigma_max.
int nullspace_dimension(const std::vector<std::vector<double>>& rows, int cols,
                        double tol);

}  // namespace mvh

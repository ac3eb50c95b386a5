#pragma once

#include <utility>
#include <vector>

#include "mvhermite/polynomial.hpp"

namespace mvh {

// Physicists' Hermite polynomial H_n, leading coefficient 2^n.
ScalarPolynomial hermite(long n);

// G_m(x) = i^m H_m(ix) as a real polynomial; these fill the inverse of the
// lower-triangular Hermite Toeplitz matrix. G_{m+1} = -2x G_m + 2m G_{m-1}.
ScalarPolynomial hermite_imag(long m);

// Linearization H_k H_l = sum_r C(k,r) C(l,r) 2^r r! H_{k+l-2r},
// returned as (Hermite index, coefficient) pairs with r = 0..min(k,l).
std::vector<std::pair<long, Rational>> hermite_linearize(long k, long l);

}  // namespace mvh

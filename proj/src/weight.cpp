#include "mvhermite/weight.hpp"

#include "mvhermite/hermite.hpp"
#include "mvhermite/linalg.hpp"

namespace mvh {

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::pochhammer: return "pochhammer";
    case FamilyId::gamma: return "gamma";
    case FamilyId::flat: return "flat";
  }
  return "?";
}

FamilyId family_from_name(const std::string& name) {
  if (name == "pochhammer") return FamilyId::pochhammer;
  if (name == "gamma") return FamilyId::gamma;
  if (name == "flat") return FamilyId::flat;
  throw InvalidParameters("unknown family: " + name);
}

WeightFamily::WeightFamily(FamilyId id, int N, Rational nu, Rational lambda,
                           Rational rho, Rational Cshift)
    : id_(id),
      N_(N),
      nu_(std::move(nu)),
      lambda_(std::move(lambda)),
      rho_(std::move(rho)),
      C_(std::move(Cshift)) {}

void WeightFamily::validate(int max_shift) const {
  if (N_ < 1) throw InvalidParameters("N must be at least 1");
  if (sgn(nu_) <= 0) throw InvalidParameters("nu must be positive");
  if (id_ == FamilyId::gamma && sgn(lambda_) <= 0)
    throw InvalidParameters("lambda must be positive");
  if (id_ == FamilyId::flat) {
    if (sgn(rho_) <= 0) throw InvalidParameters("rho must be positive");
    if (sgn(C_) < 0) throw InvalidParameters("C must be nonnegative");
  }
  for (int s = 0; s <= max_shift; ++s) {
    if (sgn(c(s)) <= 0 || sgn(d(s)) <= 0)
      throw InvalidParameters("Pearson coefficients must stay positive at shift " +
                              std::to_string(s));
    for (int k = 1; k <= N_; ++k)
      if (sgn(delta_hat(k, s)) <= 0)
        throw InvalidParameters("diagonal weight entry delta_" + std::to_string(k) +
                                " must be positive at shift " + std::to_string(s));
  }
}

WeightFamily WeightFamily::at_nu(const Rational& new_nu) const {
  return WeightFamily(id_, N_, new_nu, lambda_, rho_, C_);
}

Rational WeightFamily::c(int shift) const {
  Rational v = nu_ + shift;
  switch (id_) {
    case FamilyId::pochhammer: return v / (v + 1);
    case FamilyId::gamma: return v * lambda_;
    case FamilyId::flat: return C_ + v * rho_;
  }
  return Rational(0);
}

Rational WeightFamily::d(int shift) const {
  Rational v = nu_ + shift;
  switch (id_) {
    case FamilyId::pochhammer: return Rational(1) / (v + 1);
    case FamilyId::gamma: return lambda_;
    case FamilyId::flat: return rho_;
  }
  return Rational(0);
}

Rational WeightFamily::gamma_ratio(int shift) const {
  Rational v = nu_ + shift;
  switch (id_) {
    case FamilyId::pochhammer:
    case FamilyId::gamma: return v;
    case FamilyId::flat: return v + C_ / rho_;
  }
  return Rational(0);
}

Rational WeightFamily::delta_hat(int k, int shift) const {
  Rational v = nu_ + shift;
  switch (id_) {
    case FamilyId::pochhammer:
      return pochhammer(v + 1, k - 1) / Rational(factorial(k - 1));
    case FamilyId::gamma:
      return pochhammer(v, k) / pow_rational(Rational(2), k);
    case FamilyId::flat:
      return pow_rational(Rational(2), k - 1) * pochhammer(gamma_ratio(shift) + 1, k - 1) /
             (Rational(factorial(k - 1)) * pochhammer(Rational(N_ - k + 1), k - 1));
  }
  return Rational(0);
}

Rational WeightFamily::alpha_sq(int k) const {
  switch (id_) {
    case FamilyId::pochhammer:
      return pow_rational(Rational(2), 1 - k) * pochhammer(Rational(N_ - k + 1), k - 1);
    case FamilyId::gamma:
      return pow_rational(Rational(4), 1 - k) * Rational(factorial(k - 1)) *
             pochhammer(Rational(N_ - k + 1), k - 1);
    case FamilyId::flat: return Rational(1);
  }
  return Rational(0);
}

Rational WeightFamily::delta_gauged(int k, int shift) const {
  return delta_hat(k, shift) / alpha_sq(k);
}

Rational WeightFamily::unit_ratio(int shift) const {
  Rational v = nu_ + shift;
  switch (id_) {
    case FamilyId::pochhammer: return Rational(1);
    case FamilyId::gamma: return lambda_ * v;
    case FamilyId::flat: return rho_ * (1 + gamma_ratio(shift));
  }
  return Rational(0);
}

Rational WeightFamily::unit_ratio_prod(int shift, int count) const {
  Rational r(1);
  for (int j = 0; j < count; ++j) r *= unit_ratio(shift + j);
  return r;
}

RMatPoly build_L(int N) {
  RMatPoly L(N);
  for (long k = 0; k < N; ++k) {
    ScalarPolynomial h = hermite(k) * (Rational(1) / Rational(factorial(k)));
    for (long deg = 0; deg <= h.degree(); ++deg) {
      if (is_zero(h.coeff(deg))) continue;
      RMatrix m = L.coeff(deg);
      for (int r = k; r < N; ++r) m(r, r - k) = m(r, r - k) + h.coeff(deg);
      L.set_coeff(deg, std::move(m));
    }
  }
  return L;
}

RMatPoly build_L_inverse(int N) {
  RMatPoly Li(N);
  for (long k = 0; k < N; ++k) {
    ScalarPolynomial g = hermite_imag(k) * (Rational(1) / Rational(factorial(k)));
    for (long deg = 0; deg <= g.degree(); ++deg) {
      if (is_zero(g.coeff(deg))) continue;
      RMatrix m = Li.coeff(deg);
      for (int r = k; r < N; ++r) m(r, r - k) = m(r, r - k) + g.coeff(deg);
      Li.set_coeff(deg, std::move(m));
    }
  }
  return Li;
}

RMatrix matrix_A(int N) {
  RMatrix a(N);
  for (int j = 1; j < N; ++j) a(j, j - 1) = 2;
  return a;
}

RMatrix matrix_J(int N) {
  RMatrix j(N);
  for (int i = 0; i < N; ++i) j(i, i) = i + 1;
  return j;
}

GaugedWeight gauged_weight(const WeightFamily& fam, int shift) {
  fam.validate(shift);
  const int N = fam.N();
  RMatPoly L = build_L(N);
  std::vector<Rational> dg(N);
  for (int k = 1; k <= N; ++k) dg[k - 1] = fam.delta_gauged(k, shift);
  RMatPoly middle(RMatrix::diagonal(dg));
  return GaugedWeight{fam, shift, L * middle * L.transpose_coeffs()};
}

std::vector<std::pair<long, Rational>> weight_entry_closed_form(
    const WeightFamily& fam, int m, int n, int shift) {
  const int N = fam.N();
  const Rational gamma = fam.gamma_ratio(shift);
  const Rational d1 = fam.delta_hat(1, shift);
  std::vector<std::pair<long, Rational>> out;
  for (int t = 1; t <= std::min(m, n); ++t) {
    Rational c = d1 * pow_rational(Rational(2), t - 1) *
                 pochhammer(Rational(-N) - gamma, t - 1);
    c /= Rational(factorial(m - t)) * Rational(factorial(n - t)) *
         Rational(factorial(t - 1)) * pochhammer(Rational(1 - N), t - 1);
    out.emplace_back(m + n - 2 * t, c);
  }
  return out;
}

std::vector<PiScalar> zeroth_moment(const WeightFamily& fam, int shift) {
  const int N = fam.N();
  const Rational gamma = fam.gamma_ratio(shift);
  const Rational d1 = fam.delta_hat(1, shift);
  std::vector<PiScalar> diag;
  diag.reserve(N);
  for (int m = 1; m <= N; ++m) {
    Rational v = d1 * pow_rational(Rational(2), m - 1) *
                 pochhammer(Rational(-N) - gamma, m - 1) /
                 (Rational(factorial(m - 1)) * pochhammer(Rational(1 - N), m - 1));
    diag.emplace_back(v, 1);
  }
  return diag;
}

RMatPoly pearson_phi(const WeightFamily& fam, int shift) {
  const int N = fam.N();
  const Rational c = fam.c(shift);
  const Rational d = fam.d(shift);
  RMatrix At = matrix_A(N).transpose();
  RMatrix constant = (matrix_J(N) + (At * At).scale(Rational(1, 2))).scale(d) +
                     RMatrix::identity(N).scale(c);
  RMatPoly phi(constant);
  phi.set_coeff(1, At.scale(-d));
  return phi;
}

RMatrix pearson_psi_lc(const WeightFamily& fam, int shift) {
  const int N = fam.N();
  const Rational c = fam.c(shift);
  const Rational d = fam.d(shift);
  RMatrix lc(N);
  for (int k = 1; k <= N; ++k) lc(k - 1, k - 1) = 2 * (d * (k - N - 1) - c);
  return lc;
}

RMatrix pearson_psi_at0(const WeightFamily& fam, int shift) {
  const int N = fam.N();
  const Rational c = fam.c(shift);
  const Rational d = fam.d(shift);
  RMatrix psi0(N);
  for (int k = 1; k < N; ++k) {
    // superdiagonal (k, k+1), 1-based
    psi0(k - 1, k) = 2 * (c + d * (N - k));
    // subdiagonal (k+1, k)
    psi0(k, k - 1) = d * k * (N - k);
  }
  return psi0;
}

RMatPoly pearson_psi(const WeightFamily& fam, int shift) {
  RMatPoly psi(pearson_psi_at0(fam, shift));
  psi.set_coeff(1, pearson_psi_lc(fam, shift));
  return psi;
}

CommutantReport commutant_dimension(const WeightFamily& fam, int sample_count,
                                    double tol) {
  const int N = fam.N();
  if (sample_count < N * N)
    throw InvalidParameters("commutant sampling needs at least N^2 points");
  GaugedWeight gw = gauged_weight(fam);
  DMatPoly p = convert_matrix_poly<double, Rational>(gw.poly_part);

  // Unknown Y (row-major, N^2 entries). For each sample x_i stack the
  // entries of Y P(x_i) - P(x_i) Y, resp. Y P(x_i) - P(x_i) Y^T.
  std::vector<std::vector<double>> rows_comm, rows_star;
  for (int s = 0; s < sample_count; ++s) {
    double x = -2.0 + 4.0 * (s + 0.5) / sample_count + 1.0 / 7.0;
    DMatrix w = p.evaluate(x);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        std::vector<double> rc(N * N, 0.0), rs(N * N, 0.0);
        for (int k = 0; k < N; ++k) {
          rc[i * N + k] += w(k, j);   // (Y W)_{ij} term
          rc[k * N + j] -= w(i, k);   // (W Y)_{ij} term
          rs[i * N + k] += w(k, j);   // (Y W)_{ij}
          rs[j * N + k] -= w(i, k);   // (W Y^T)_{ij} = sum_k W_{ik} Y_{jk}
        }
        rows_comm.push_back(std::move(rc));
        rows_star.push_back(std::move(rs));
      }
  }
  return CommutantReport{nullspace_dimension(rows_comm, N * N, tol),
                         nullspace_dimension(rows_star, N * N, tol)};
}

bool positive_definite_at(const GaugedWeight& gw, const Rational& x) {
  RMatrix w = gw.poly_part.evaluate(x);
  const int n = w.dim();
  // Leading principal minors via fraction-free elimination on a copy.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = w(i, j);
  for (int k = 0; k < n; ++k) {
    // Schur pivots: positive definite iff every pivot is positive.
    if (sgn(a[k][k]) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

}  // namespace mvh

#include "mvhermite/mvops.hpp"

#include "mvhermite/hermite.hpp"
#include "mvhermite/linalg.hpp"

namespace mvh {

RMatrix ladder_K(const WeightFamily& fam, int shift) {
  return pearson_psi_lc(fam, shift);
}

RMatrix g_prefactor(const WeightFamily& fam, int shift, int n) {
  const int N = fam.N();
  RMatrix g = RMatrix::identity(N);
  for (int j = 0; j < n; ++j) {
    RMatrix k = ladder_K(fam, shift + j);
    for (int i = 0; i < N; ++i) g(i, i) /= k(i, i);
  }
  return g;
}

std::vector<PiScalar> norm_H(const WeightFamily& fam, int shift, int n) {
  const int N = fam.N();
  RMatrix g = g_prefactor(fam, shift, n);
  std::vector<PiScalar> h0 = zeroth_moment(fam, shift + n);
  Rational pref = Rational(factorial(n)) * fam.unit_ratio_prod(shift, n);
  if (n % 2 == 1) pref = -pref;
  std::vector<PiScalar> h;
  h.reserve(N);
  for (int i = 0; i < N; ++i) h.push_back(h0[i] * (pref * g(i, i)));
  return h;
}

RMatrix x_coefficient(const WeightFamily& fam, int shift, int n) {
  const int N = fam.N();
  if (n == 0) return RMatrix(N);
  RMatrix kinv = inverse(ladder_K(fam, shift + n - 1));
  return (kinv * pearson_psi_at0(fam, shift + n - 1).transpose()).scale(Rational(n));
}

RMatrix recurrence_B(const WeightFamily& fam, int shift, int n) {
  return x_coefficient(fam, shift, n) - x_coefficient(fam, shift, n + 1);
}

RMatrix recurrence_C(const WeightFamily& fam, int shift, int n) {
  const int N = fam.N();
  std::vector<PiScalar> hn = norm_H(fam, shift, n);
  std::vector<PiScalar> hm = norm_H(fam, shift, n - 1);
  RMatrix c(N);
  for (int i = 0; i < N; ++i) c(i, i) = hn[i].coeff / hm[i].coeff;
  return c;
}

RMatrix recurrence_C_printed(const WeightFamily& fam, int shift, int n) {
  const int N = fam.N();
  const Rational gnext = fam.gamma_ratio(shift + n);
  const Rational gprev = fam.gamma_ratio(shift + n - 1);
  // True delta_1 ratio: stored ratio times the dropped unit.
  const Rational d1ratio = fam.delta_hat(1, shift + n) /
                           fam.delta_hat(1, shift + n - 1) *
                           fam.unit_ratio(shift + n - 1);
  const Rational pref = Rational(-2 * n) / fam.d(shift + n - 1) * d1ratio;
  RMatrix c(N);
  for (int p = 1; p <= N; ++p)
    c(p - 1, p - 1) = pref * pochhammer(Rational(-N) - gnext, p - 1) /
                      pochhammer(Rational(-N) - gprev, p);
  return c;
}

namespace {

// Exact matrix moments of the gauged weight, with sqrt(pi) factored out.
std::vector<RMatrix> weight_moments(const GaugedWeight& gw, int count) {
  const int N = gw.poly_part.dim();
  std::vector<RMatrix> mom(count, RMatrix(N));
  for (int j = 0; j < count; ++j) {
    RMatrix m(N);
    for (long d = 0; d <= gw.poly_part.degree(); ++d) {
      Rational g = gauss_moment_rational(d + j);
      if (is_zero(g)) continue;
      m = m + gw.poly_part.coeff(d).scale(g);
    }
    mom[j] = std::move(m);
  }
  return mom;
}

}  // namespace

MVOPSequence mvop_by_gram_schmidt(const WeightFamily& fam, int shift, int nmax) {
  fam.validate(shift);
  const int N = fam.N();
  GaugedWeight gw = gauged_weight(fam, shift);
  // One degree past nmax so the recurrence data comes out of this route
  // alone (B_n needs the subleading coefficient of P_{n+1}).
  const int build_max = nmax + 1;
  std::vector<RMatrix> mom = weight_moments(gw, 2 * build_max + 1);

  MVOPSequence seq{fam, shift, {}, {}, {}, {}};
  seq.polys.reserve(build_max + 1);
  seq.norms.reserve(build_max + 1);

  for (int n = 0; n <= build_max; ++n) {
    RMatPoly p = RMatPoly::monomial(RMatrix::identity(N), n);
    if (n > 0) {
      // sum_j A_j M_{j+k} = -M_{n+k}, k = 0..n-1; moments are symmetric, so
      // the transposed system stacks as a block Hankel matrix.
      const int dimsys = n * N;
      std::vector<std::vector<Rational>> h(dimsys, std::vector<Rational>(dimsys));
      std::vector<std::vector<Rational>> rhs(dimsys, std::vector<Rational>(N));
      for (int kb = 0; kb < n; ++kb)
        for (int jb = 0; jb < n; ++jb)
          for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
              h[kb * N + i][jb * N + j] = mom[kb + jb](i, j);
      for (int kb = 0; kb < n; ++kb)
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j)
            rhs[kb * N + i][j] = -mom[n + kb](i, j);
      try {
        gauss_solve(h, rhs);
      } catch (const SingularSystem&) {
        throw SingularMomentMatrix(
            "moment matrix singular: weight is not positive definite");
      }
      for (int jb = 0; jb < n; ++jb) {
        RMatrix a(N);
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j) a(i, j) = rhs[jb * N + j][i];  // transpose back
        p.set_coeff(jb, std::move(a));
      }
    }
    // H_n = <P_n, x^n I> = sum_j A_j M_{n+j}.
    RMatrix hn(N);
    for (long j = 0; j <= p.degree(); ++j) hn = hn + p.coeff(j) * mom[n + j];
    std::vector<PiScalar> diag;
    diag.reserve(N);
    for (int i = 0; i < N; ++i) diag.emplace_back(hn(i, i), 1);
    seq.polys.push_back(std::move(p));
    seq.norms.push_back(std::move(diag));
  }

  // Recurrence data recovered from the polynomials and norms.
  seq.Bn.reserve(nmax + 1);
  seq.Cn.reserve(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    RMatrix xn = n >= 1 ? seq.polys[n].coeff(n - 1) : RMatrix(N);
    RMatrix xn1 = seq.polys[n + 1].coeff(n);
    seq.Bn.push_back(xn - xn1);
    if (n == 0) {
      seq.Cn.push_back(RMatrix(N));
    } else {
      RMatrix c(N);
      for (int i = 0; i < N; ++i)
        c(i, i) = seq.norms[n][i].coeff / seq.norms[n - 1][i].coeff;
      seq.Cn.push_back(std::move(c));
    }
  }
  seq.polys.resize(nmax + 1);
  seq.norms.resize(nmax + 1);
  return seq;
}

MVOPSequence mvop_by_recurrence(const WeightFamily& fam, int shift, int nmax) {
  fam.validate(shift + nmax);
  const int N = fam.N();
  MVOPSequence seq{fam, shift, {}, {}, {}, {}};
  for (int n = 0; n <= nmax; ++n) {
    seq.norms.push_back(norm_H(fam, shift, n));
    seq.Bn.push_back(recurrence_B(fam, shift, n));
    seq.Cn.push_back(n == 0 ? RMatrix(N) : recurrence_C(fam, shift, n));
  }
  seq.polys.push_back(RMatPoly::identity(N));
  for (int n = 0; n < nmax; ++n) {
    RMatPoly next = RMatPoly::monomial(RMatrix::identity(N), 1) * seq.polys[n] -
                    seq.polys[n].left_mul(seq.Bn[n]);
    if (n >= 1) next = next - seq.polys[n - 1].left_mul(seq.Cn[n]);
    seq.polys.push_back(std::move(next));
  }
  return seq;
}

RMatPoly mvop_by_explicit_entries(const WeightFamily& fam, int shift, int n) {
  fam.validate(shift + n);
  const int N = fam.N();
  const Rational gamma = fam.gamma_ratio(shift);

  // Per-row prefactor 2^{-n}/(r-1)! prod_k (1+gamma_k)/(N-r+1+gamma_k).
  std::vector<Rational> rowpref(N + 1);
  for (int r = 1; r <= N; ++r) {
    Rational pref = pow_rational(Rational(2), -static_cast<long>(n)) /
                    Rational(factorial(r - 1));
    for (int k = 0; k < n; ++k) {
      Rational gk = fam.gamma_ratio(shift + k);
      pref *= (1 + gk) / (Rational(N - r + 1) + gk);
    }
    rowpref[r] = pref;
  }

  RMatPoly p(N);
  for (int r = 1; r <= N; ++r) {
    for (int t = 1; t <= N; ++t) {
      ScalarPolynomial entry;
      const int smax = std::min<long>(N, n + r);
      for (int s = t; s <= smax; ++s) {
        Rational f32 = hyp3f2_terminating(Rational(1 - s), Rational(r - N),
                                          Rational(n + 1) + gamma, Rational(1 - N),
                                          Rational(1) + gamma);
        Rational coef = pochhammer(Rational(N - s + 1), s - 1) /
                        Rational(factorial(s - t)) * f32;
        if (is_zero(coef)) continue;
        entry = entry + hermite(n + r - s) * hermite_imag(s - t) * coef;
      }
      entry = entry * rowpref[r];
      for (long d = 0; d <= entry.degree(); ++d) {
        if (is_zero(entry.coeff(d))) continue;
        RMatrix m = p.coeff(d);
        m(r - 1, t - 1) = m(r - 1, t - 1) + entry.coeff(d);
        p.set_coeff(d, std::move(m));
      }
    }
  }
  return p;
}

RMatPoly mvop_by_rodrigues(const WeightFamily& fam, int shift, int n) {
  fam.validate(shift + n);
  const int N = fam.N();
  // n-th derivative of e^{-x^2} P^{(nu+n)} equals e^{-x^2} times the
  // n-fold weighted derivative Q -> Q' - 2xQ.
  RMatPoly q = gauged_weight(fam, shift + n).poly_part;
  RMatPoly x_id = RMatPoly::monomial(RMatrix::identity(N), 1);
  for (int k = 0; k < n; ++k) q = q.derivative() - x_id * q * Rational(2);

  // Inverse weight polynomial part: (L^-1)^T Delta^-1 L^-1.
  RMatPoly li = build_L_inverse(N);
  std::vector<Rational> dinv(N);
  for (int k = 1; k <= N; ++k) dinv[k - 1] = Rational(1) / fam.delta_gauged(k, shift);
  RMatPoly winv = li.transpose_coeffs() * RMatPoly(RMatrix::diagonal(dinv)) * li;

  RMatrix g = g_prefactor(fam, shift, n);
  RMatPoly p = (q * winv).left_mul(g.scale(fam.unit_ratio_prod(shift, n)));
  if (p.degree() != n || p.leading_coeff() != RMatrix::identity(N))
    throw NonPolynomialResult("Rodrigues product is not monic of the expected degree");
  return p;
}

namespace {

RMatPoly poly_at(const WeightFamily& fam, int shift, int n) {
  return mvop_by_recurrence(fam, shift, n).polys[n];
}

}  // namespace

RMatPoly shift_down_residual(const WeightFamily& fam, int shift, int n) {
  RMatPoly pn = poly_at(fam, shift, n);
  RMatPoly pprev = poly_at(fam, shift + 1, n - 1);
  return pn.derivative() - pprev * Rational(n);
}

RMatPoly shift_up_residual(const WeightFamily& fam, int shift, int n) {
  RMatPoly pprev = poly_at(fam, shift + 1, n - 1);
  RMatPoly phiT = pearson_phi(fam, shift).transpose_coeffs();
  RMatPoly psiT = pearson_psi(fam, shift).transpose_coeffs();
  RMatPoly raised = pprev.derivative() * phiT + pprev * psiT;
  RMatPoly pn = poly_at(fam, shift, n);
  return raised - pn.left_mul(ladder_K(fam, shift));
}

std::vector<RMatrix> connection_coefficients(const WeightFamily& fam,
                                             const Rational& to_nu, int n) {
  WeightFamily target = fam.at_nu(to_nu);
  target.validate();
  MVOPSequence tgt = mvop_by_recurrence(target, 0, n);
  RMatPoly r = poly_at(fam, 0, n);
  std::vector<RMatrix> coeffs;
  coeffs.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    RMatrix a = r.coeff(n - k);
    coeffs.push_back(a);
    r = r - tgt.polys[n - k].left_mul(a);
  }
  if (!r.is_zero_poly())
    throw SingularSystem("connection elimination left a nonzero remainder");
  return coeffs;
}

Rational connection_coefficient_formula(const WeightFamily& fam,
                                        const Rational& to_nu, int n, int k,
                                        int r) {
  const int N = fam.N();
  WeightFamily target = fam.at_nu(to_nu);
  const Rational gnu = fam.gamma_ratio(0);
  const Rational gla = target.gamma_ratio(0);

  // Ratio products R(nu,n,r) / R(lambda,n-k,r+k) from the entrywise formula.
  Rational ratio(1);
  for (int p = 0; p < n; ++p) {
    Rational g = fam.gamma_ratio(p);
    ratio *= (1 + g) / (Rational(N - r + 1) + g);
  }
  for (int p = 0; p < n - k; ++p) {
    Rational g = target.gamma_ratio(p);
    ratio *= (Rational(N - r - k + 1) + g) / (1 + g);
  }

  // Hahn connection over the first parameter, assembled from the standard
  // second-parameter expansion conjugated by the x -> N-x reflection. The
  // degenerate Pochhammer pair (n+r-N+1)_{N-r}/(n+r-N+1)_{N-r-k} is combined
  // into the falling factorial (-1)^k (-n)_k before anything can vanish.
  Rational hahn = Rational(binomial(N - r, k)) * pochhammer(gnu - gla, k) *
                  pochhammer(gla + 1, N - r - k) / pochhammer(gnu + 1, N - r);
  hahn *= (Rational(N - r - 2 * k + n + 1) + gla) /
          (Rational(N - r - k + n + 1) + gla);
  Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  hahn *= sign * pochhammer(Rational(-n), k) * pochhammer(Rational(n + 1) + gnu, N - r - k) /
          pochhammer(Rational(n - k + 1) + gla, N - r);

  Rational gaugefix = Rational(factorial(r + k - 1)) / Rational(factorial(r - 1));
  return pow_rational(Rational(2), -static_cast<long>(k)) * gaugefix * ratio * hahn;
}

Rational vanishing_sum(const WeightFamily& fam, int shift, int n, int r, int t) {
  const int N = fam.N();
  const Rational gamma = fam.gamma_ratio(shift);
  Rational sum(0);
  const int smax = std::min<long>(N, n + r);
  for (int s = t; s <= smax; ++s) {
    Rational f32 = hyp3f2_terminating(Rational(1 - s), Rational(r - N),
                                      Rational(n + 1) + gamma, Rational(1 - N),
                                      Rational(1) + gamma);
    Rational sign = ((s - t) % 2 == 0) ? Rational(1) : Rational(-1);
    sum += sign * pochhammer(Rational(N - s + 1), s - 1) /
           Rational(factorial(s - t)) * f32;
  }
  return sum;
}

Rational dual_hahn_recurrence_residual(const Rational& gamma, int N, int n,
                                       int r, int s) {
  auto F = [&](int si) {
    return hyp3f2_terminating(Rational(1 - si), Rational(r - N),
                              Rational(n + 1) + gamma, Rational(1 - N),
                              Rational(1) + gamma);
  };
  Rational cs = F(s);
  Rational up = (s < N) ? F(s + 1) : Rational(0);
  Rational down = (s > 1) ? F(s - 1) : Rational(0);
  Rational lhs = (Rational(s) + gamma) * Rational(s - N) * up -
                 ((Rational(s) + gamma) * Rational(s - n - r) +
                  Rational(s - 1) * Rational(s - N - 1)) * cs +
                 Rational(s - n - r - 1) * Rational(s - 1) * down;
  Rational rhs = Rational(n) * (Rational(N + 1 - r) + gamma) * cs;
  return lhs - rhs;
}

}  // namespace mvh

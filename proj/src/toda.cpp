#include "mvhermite/toda.hpp"

#include <cmath>

namespace mvh {

namespace {

TMatrix to_tmatrix(const RMatrix& m) {
  TMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = TPoly(m(i, j));
  return r;
}

BivarMatPoly to_bivariate(const RMatPoly& p) {
  BivarMatPoly r(p.dim());
  for (long k = 0; k <= p.degree(); ++k) r.set_coeff(k, to_tmatrix(p.coeff(k)));
  return r;
}

RMatPoly monic_poly(const WeightFamily& fam, int shift, int n) {
  return mvop_by_recurrence(fam, shift, n).polys[n];
}

}  // namespace

TMatrix exp_tA(const RMatrix& A, const Rational& c) {
  const int n = A.dim();
  TMatrix r(n);
  RMatrix pw = RMatrix::identity(n);
  Rational ck(1);
  for (int k = 0; k < n; ++k) {
    Rational f = ck / Rational(factorial(k));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(pw(i, j))) {
          TPoly e = r(i, j);
          e.set_coeff(k, e.coeff(k) + f * pw(i, j));
          r(i, j) = std::move(e);
        }
    pw = pw * A;
    ck *= c;
  }
  if (!pw.is_zero_matrix()) throw NotNilpotent("exp_tA needs a nilpotent matrix");
  return r;
}

RMatrix exp_A_at(const RMatrix& A, const Rational& c) {
  const int n = A.dim();
  RMatrix r(n);
  RMatrix pw = RMatrix::identity(n);
  Rational ck(1);
  for (int k = 0; k < n; ++k) {
    r = r + pw.scale(ck / Rational(factorial(k)));
    pw = pw * A;
    ck *= c;
  }
  if (!pw.is_zero_matrix()) throw NotNilpotent("exp_A_at needs a nilpotent matrix");
  return r;
}

TodaClosedForm toda_closed_form(const WeightFamily& fam, int shift, int nmax) {
  const int N = fam.N();
  RMatrix A = matrix_A(N);
  TMatrix eminus = exp_tA(A, Rational(-1, 2));
  TMatrix eplus = exp_tA(A, Rational(1, 2));
  TPoly half_t;
  half_t.set_coeff(1, Rational(1, 2));
  TMatrix half_t_id(N);
  for (int i = 0; i < N; ++i) half_t_id(i, i) = half_t;

  MVOPSequence seq = mvop_by_recurrence(fam, shift, nmax + 1);
  TodaClosedForm cf{fam, shift, {}, {}};
  cf.Bn.reserve(nmax + 2);
  cf.Cn.reserve(nmax + 2);
  for (int n = 0; n <= nmax + 1; ++n) {
    RMatrix bstat = n <= nmax ? seq.Bn[n] : recurrence_B(fam, shift, n);
    cf.Bn.push_back(eminus * to_tmatrix(bstat) * eplus - half_t_id);
    cf.Cn.push_back(eminus * to_tmatrix(seq.Cn[n]) * eplus);
  }
  return cf;
}

TMatrix t_derivative(const TMatrix& m) {
  TMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = m(i, j).derivative();
  return r;
}

TodaResiduals toda_residuals(const WeightFamily& fam, int shift, int nmax) {
  TodaClosedForm cf = toda_closed_form(fam, shift, nmax);
  TodaResiduals res;
  for (int n = 0; n <= nmax; ++n)
    res.b_residuals.push_back(t_derivative(cf.Bn[n]) - (cf.Cn[n] - cf.Cn[n + 1]));
  for (int n = 1; n <= nmax; ++n)
    res.c_residuals.push_back(t_derivative(cf.Cn[n]) -
                              (cf.Cn[n] * cf.Bn[n - 1] - cf.Bn[n] * cf.Cn[n]));
  return res;
}

bool tmatrix_is_zero(const TMatrix& m) { return m.is_zero_matrix(); }

std::vector<TPoly> char_poly(const TMatrix& m) {
  const int n = m.dim();
  std::vector<TPoly> c(n + 1);
  c[0] = TPoly(Rational(1));
  TMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    TPoly tr = mk.trace();
    c[k] = tr * ScalarFrom<TPoly>::rational(Rational(-1) / Rational(k));
    if (k < n) {
      TMatrix ck(n);
      for (int i = 0; i < n; ++i) ck(i, i) = c[k];
      mk = m * (mk + ck);
    }
  }
  return c;
}

std::vector<TPoly> char_poly_constant(const RMatrix& m) {
  return char_poly([&] {
    TMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) r(i, j) = TPoly(m(i, j));
    return r;
  }());
}

TodaNumericState closed_form_numeric(const TodaClosedForm& cf, int nmax,
                                     double t) {
  TodaNumericState s;
  s.t = t;
  auto eval = [&](const TMatrix& m) {
    DMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) {
        double acc = 0;
        for (long k = m(i, j).degree(); k >= 0; --k)
          acc = acc * t + m(i, j).coeff(k).get_d();
        r(i, j) = acc;
      }
    return r;
  };
  for (int n = 0; n <= nmax; ++n) {
    s.B.push_back(eval(cf.Bn[n]));
    s.C.push_back(eval(cf.Cn[n]));
  }
  return s;
}

namespace {

struct Derivs {
  std::vector<DMatrix> dB, dC;
};

Derivs lattice_rhs(const TodaClosedForm& cf, int nmax,
                   const std::vector<DMatrix>& B, const std::vector<DMatrix>& C,
                   double t) {
  Derivs d;
  const int N = B[0].dim();
  // Top boundary: C_{nmax+1}(t) from the closed form.
  DMatrix ctop(N);
  {
    const TMatrix& m = cf.Cn[nmax + 1];
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        double acc = 0;
        for (long k = m(i, j).degree(); k >= 0; --k)
          acc = acc * t + m(i, j).coeff(k).get_d();
        ctop(i, j) = acc;
      }
  }
  for (int n = 0; n <= nmax; ++n) {
    const DMatrix& cnext = (n + 1 <= nmax) ? C[n + 1] : ctop;
    d.dB.push_back(C[n] - cnext);
  }
  d.dC.push_back(DMatrix(N));  // C_0 stays zero
  for (int n = 1; n <= nmax; ++n)
    d.dC.push_back(C[n] * B[n - 1] - B[n] * C[n]);
  return d;
}

}  // namespace

TodaNumericState toda_integrate(const TodaClosedForm& cf, int nmax,
                                TodaNumericState s, double t_end, double h) {
  if (h <= 0) throw InvalidParameters("step size must be positive");
  const double guard = 1e12;
  auto axpy = [](const std::vector<DMatrix>& a, const std::vector<DMatrix>& b,
                 double f) {
    std::vector<DMatrix> r;
    r.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i].scale(f));
    return r;
  };
  auto rk4_step = [&](double step) {
    double t = s.t;
    Derivs k1 = lattice_rhs(cf, nmax, s.B, s.C, t);
    Derivs k2 = lattice_rhs(cf, nmax, axpy(s.B, k1.dB, step / 2),
                            axpy(s.C, k1.dC, step / 2), t + step / 2);
    Derivs k3 = lattice_rhs(cf, nmax, axpy(s.B, k2.dB, step / 2),
                            axpy(s.C, k2.dC, step / 2), t + step / 2);
    Derivs k4 = lattice_rhs(cf, nmax, axpy(s.B, k3.dB, step),
                            axpy(s.C, k3.dC, step), t + step);
    for (int n = 0; n <= nmax; ++n) {
      s.B[n] = s.B[n] +
               (k1.dB[n] + (k2.dB[n] + k3.dB[n]).scale(2.0) + k4.dB[n]).scale(step / 6);
      s.C[n] = s.C[n] +
               (k1.dC[n] + (k2.dC[n] + k3.dC[n]).scale(2.0) + k4.dC[n]).scale(step / 6);
      if (max_abs(s.B[n]) > guard || max_abs(s.C[n]) > guard)
        throw StepRejected("lattice state exceeded overflow guard");
    }
    s.t = t + step;
  };
  // Whole steps of h, then one shorter step to land exactly on t_end.
  double span = t_end - s.t;
  if (span < 0) throw InvalidParameters("integration backwards in time");
  long steps = static_cast<long>(std::floor(span / h + 1e-9));
  for (long i = 0; i < steps; ++i) rk4_step(h);
  double rest = t_end - s.t;
  if (rest > 1e-12 * std::max(1.0, std::abs(t_end))) rk4_step(rest);
  s.t = t_end;
  return s;
}

double max_state_deviation(const TodaNumericState& a, const TodaNumericState& b) {
  double dev = 0;
  for (size_t n = 0; n < a.B.size(); ++n) {
    dev = std::max(dev, max_abs(a.B[n] - b.B[n]));
    dev = std::max(dev, max_abs(a.C[n] - b.C[n]));
  }
  return dev;
}

RMatPoly toda_deformed_poly(const WeightFamily& fam, int shift, int n,
                            const Rational& t) {
  const int N = fam.N();
  RMatrix A = matrix_A(N);
  RMatrix eminus = exp_A_at(A, -t / 2);
  RMatrix eplus = exp_A_at(A, t / 2);
  RMatPoly p = monic_poly(fam, shift, n).compose_shift(t / 2);
  return p.left_mul(eminus).right_mul(eplus);
}

BivarMatPoly toda_deformed_bivariate(const WeightFamily& fam, int shift, int n) {
  const int N = fam.N();
  RMatrix A = matrix_A(N);
  TMatrix eminus = exp_tA(A, Rational(-1, 2));
  TMatrix eplus = exp_tA(A, Rational(1, 2));
  TPoly half_t;
  half_t.set_coeff(1, Rational(1, 2));
  BivarMatPoly p = to_bivariate(monic_poly(fam, shift, n)).compose_shift(half_t);
  return p.left_mul(eminus).right_mul(eplus);
}

BivarMatPoly t_derivative(const BivarMatPoly& p) {
  BivarMatPoly r(p.dim());
  for (long k = 0; k <= p.degree(); ++k) r.set_coeff(k, t_derivative(p.coeff(k)));
  return r;
}

RMatPoly evaluate_t(const BivarMatPoly& p, const Rational& t) {
  RMatPoly r(p.dim());
  for (long k = 0; k <= p.degree(); ++k) r.set_coeff(k, evaluate_t(p.coeff(k), t));
  return r;
}

RMatrix evaluate_t(const TMatrix& m, const Rational& t) {
  RMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = m(i, j).evaluate(t);
  return r;
}

RMatrix toda_Mn(const WeightFamily& fam, int shift, int n, const Rational& t) {
  const int N = fam.N();
  RMatrix A = matrix_A(N);
  RMatrix sum(N);
  RMatrix apow = RMatrix::identity(N);
  Rational tk(1), dprod(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      apow = apow * A;
      tk *= t;
      dprod *= fam.d(shift + k - 1);
    }
    RMatrix ginv = inverse(g_prefactor(fam, shift + k, n - k));
    sum = sum + (ginv * apow).scale(Rational(binomial(n, k)) * tk * dprod);
  }
  return sum;
}

RMatPoly toda_expansion_residual(const WeightFamily& fam, int shift, int n,
                                 const Rational& t) {
  const int N = fam.N();
  RMatPoly lhs = toda_deformed_poly(fam, shift, n, t);

  RMatPoly sum(N);
  RMatPoly phiprod = RMatPoly::identity(N);
  Rational tk(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      phiprod = phiprod * pearson_phi(fam, shift + k - 1);
      tk *= -t;
    }
    RMatrix ginv = inverse(g_prefactor(fam, shift + k, n - k));
    RMatPoly term = monic_poly(fam, shift + k, n - k).left_mul(ginv) *
                    phiprod.transpose_coeffs();
    sum = sum + term * (tk * Rational(binomial(n, k)));
  }
  RMatrix minv = inverse(toda_Mn(fam, shift, n, t));
  return lhs - sum.left_mul(minv);
}

BivarMatPoly toda_timederivative_residual(const WeightFamily& fam, int shift,
                                          int n) {
  BivarMatPoly pn = toda_deformed_bivariate(fam, shift, n);
  BivarMatPoly pm = toda_deformed_bivariate(fam, shift, n - 1);
  TMatrix xdot = t_derivative(pn.coeff(n - 1));
  return t_derivative(pn) - pm.left_mul(xdot);
}

RMatPoly toda_simplified_identity_residual(const WeightFamily& fam, int shift,
                                           int n, const Rational& t) {
  const int N = fam.N();
  RMatrix A = matrix_A(N);
  RMatPoly pn_shift = monic_poly(fam, shift, n).compose_shift(t / 2);
  RMatPoly pnm1_shift = monic_poly(fam, shift, n - 1).compose_shift(t / 2);
  RMatPoly pnm1_up = monic_poly(fam, shift + 1, n - 1).compose_shift(t / 2);

  BivarMatPoly pn_t = toda_deformed_bivariate(fam, shift, n);
  RMatrix xdot = evaluate_t(t_derivative(pn_t.coeff(n - 1)), t);
  RMatrix conj = exp_A_at(A, t / 2) * xdot * exp_A_at(A, -t / 2);

  RMatPoly lhs = pnm1_up * Rational(n) + pn_shift.right_mul(A) - pn_shift.left_mul(A);
  RMatPoly rhs = pnm1_shift.left_mul(conj.scale(Rational(2)));
  return lhs - rhs;
}

}  // namespace mvh

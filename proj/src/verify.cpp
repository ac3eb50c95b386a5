#include "mvhermite/verify.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "mvhermite/burchnall.hpp"
#include "mvhermite/diffops.hpp"
#include "mvhermite/mvops.hpp"
#include "mvhermite/quadrature.hpp"
#include "mvhermite/toda.hpp"

namespace mvh {

WeightFamily make_family(FamilyId id, int N, const Rational& nu) {
  switch (id) {
    case FamilyId::pochhammer: return WeightFamily(id, N, nu);
    case FamilyId::gamma: return WeightFamily(id, N, nu, Rational(1));
    case FamilyId::flat:
      return WeightFamily(id, N, nu, Rational(1), Rational(1), Rational(1, 2));
  }
  throw InvalidParameters("bad family id");
}

std::vector<FamilyId> all_families() {
  return {FamilyId::pochhammer, FamilyId::gamma, FamilyId::flat};
}

void run_parallel(std::vector<std::function<void()>> jobs) {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("MVHERMITE_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) threads = std::min<unsigned>(threads, cap);
  }
  threads = std::min<unsigned>(threads, jobs.size());
  if (threads <= 1) {
    for (auto& j : jobs) j();
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
        jobs[i]();
    });
  for (auto& th : pool) th.join();
}

namespace {

std::string point_desc(const WeightFamily& f) {
  std::ostringstream os;
  os << family_name(f.id()) << " N=" << f.N() << " nu=" << to_string(f.nu());
  return os.str();
}

// Runs `body` once per (family, N, nu) point, in parallel, collecting results
// in deterministic order.
std::vector<CheckResult> sweep(
    const SweepConfig& cfg,
    const std::function<std::vector<CheckResult>(const WeightFamily&)>& body) {
  std::vector<WeightFamily> points;
  for (FamilyId id : all_families())
    for (int N : cfg.Ns)
      for (const Rational& nu : cfg.nus) points.push_back(make_family(id, N, nu));
  std::vector<std::vector<CheckResult>> slots(points.size());
  std::vector<std::function<void()>> jobs;
  jobs.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i)
    jobs.push_back([&, i] { slots[i] = body(points[i]); });
  run_parallel(std::move(jobs));
  std::vector<CheckResult> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

RMatPoly corrupt(RMatPoly p, bool enabled) {
  if (!enabled || p.dim() < 2) return p;
  RMatrix c0 = p.coeff(0);
  c0(0, 1) = c0(0, 1) + 1;
  p.set_coeff(0, c0);
  return p;
}

}  // namespace

std::vector<CheckResult> suite_pearson(const SweepConfig& cfg) {
  return sweep(cfg, [&](const WeightFamily& fam) {
    std::vector<CheckResult> out;
    const int N = fam.N();
    const std::string pt = point_desc(fam);

    // delta_k^{(nu+1)} * unit_ratio = (d k + c) delta_k^{(nu)}.
    bool dpass = true;
    for (int k = 1; k <= N; ++k)
      if (fam.delta_hat(k, 1) * fam.unit_ratio(0) !=
          (fam.d(0) * k + fam.c(0)) * fam.delta_hat(k, 0))
        dpass = false;
    out.push_back({"delta-constraint", pt, dpass, false, ""});

    // alpha_{k+1}^2/alpha_k^2 = d k (N-k) delta_{k+1} / (2 (d k + c) delta_k).
    bool apass = true;
    for (int k = 1; k < N; ++k)
      if (fam.alpha_sq(k + 1) / fam.alpha_sq(k) !=
          fam.d(0) * k * (N - k) * fam.delta_hat(k + 1, 0) /
              (2 * (fam.d(0) * k + fam.c(0)) * fam.delta_hat(k, 0)))
        apass = false;
    out.push_back({"alpha-constraint", pt, apass, false, ""});

    RMatPoly w0 = corrupt(gauged_weight(fam, 0).poly_part, cfg.negative_control);
    RMatPoly w1 = gauged_weight(fam, 1).poly_part;
    Rational u = fam.unit_ratio(0);

    RMatPoly r1 = w1 * u - w0 * pearson_phi(fam, 0);
    out.push_back({"pearson1", pt, r1.is_zero_poly(), false, ""});

    RMatPoly x_id = RMatPoly::monomial(RMatrix::identity(N), 1);
    RMatPoly lhs2 = (w1.derivative() - x_id * w1 * Rational(2)) * u;
    RMatPoly r2 = lhs2 - w0 * pearson_psi(fam, 0);
    out.push_back({"pearson2", pt, r2.is_zero_poly(), false, ""});

    // L^{-1} J L = J - A^2/2 + xA and L(x) = L(0) e^{xA}.
    RMatPoly L = build_L(N), Li = build_L_inverse(N);
    RMatrix A = matrix_A(N), J = matrix_J(N);
    RMatPoly conj = Li * RMatPoly(J) * L;
    RMatPoly expect = RMatPoly(J - (A * A).scale(Rational(1, 2)));
    expect.set_coeff(1, A);
    out.push_back({"conjugated-J", pt, conj == expect, false, ""});
    RMatPoly expA = nilpotent_exp(A);
    out.push_back(
        {"L-exponential", pt, L == RMatPoly(L.evaluate(Rational(0))) * expA,
         false, ""});
    return out;
  });
}

std::vector<CheckResult> suite_routes(const SweepConfig& cfg) {
  return sweep(cfg, [&](const WeightFamily& fam) {
    std::vector<CheckResult> out;
    const std::string pt = point_desc(fam);
    MVOPSequence gs = mvop_by_gram_schmidt(fam, 0, cfg.nmax);
    MVOPSequence rec = mvop_by_recurrence(fam, 0, cfg.nmax);
    bool polys_eq = true, norms_eq = true, explicit_eq = true, rodrigues_eq = true;
    for (int n = 0; n <= cfg.nmax; ++n) {
      if (corrupt(gs.polys[n], cfg.negative_control) != rec.polys[n]) polys_eq = false;
      for (int i = 0; i < fam.N(); ++i)
        if (!(gs.norms[n][i] == rec.norms[n][i])) norms_eq = false;
      if (mvop_by_explicit_entries(fam, 0, n) != rec.polys[n]) explicit_eq = false;
      if (mvop_by_rodrigues(fam, 0, n) != rec.polys[n]) rodrigues_eq = false;
    }
    out.push_back({"route-gs-vs-recurrence", pt, polys_eq, false, ""});
    out.push_back({"route-norms", pt, norms_eq, false, ""});
    out.push_back({"route-explicit", pt, explicit_eq, false, ""});
    out.push_back({"route-rodrigues", pt, rodrigues_eq, false, ""});
    return out;
  });
}

std::vector<CheckResult> suite_structure(const SweepConfig& cfg) {
  return sweep(cfg, [&](const WeightFamily& fam) {
    std::vector<CheckResult> out;
    const std::string pt = point_desc(fam);
    MVOPSequence seq = mvop_by_recurrence(fam, 0, cfg.nmax);
    bool h_ok = true, c_ok = true, b_ok = true, bh_ok = true;
    for (int n = 0; n <= cfg.nmax; ++n) {
      for (int i = 0; i < fam.N(); ++i) {
        if (!(sgn(seq.norms[n][i].coeff) > 0 && seq.norms[n][i].pi_power == 1))
          h_ok = false;
        if (n >= 1 && sgn(seq.Cn[n](i, i)) <= 0) c_ok = false;
      }
      if (n >= 1 && !seq.Cn[n].is_diagonal()) c_ok = false;
      if (!seq.Bn[n].is_tridiagonal_zero_diagonal()) b_ok = false;
      std::vector<Rational> h(fam.N());
      for (int i = 0; i < fam.N(); ++i) h[i] = seq.norms[n][i].coeff;
      if (!(seq.Bn[n] * RMatrix::diagonal(h)).is_symmetric()) bh_ok = false;
    }
    out.push_back({"norms-positive-diagonal", pt, h_ok, false, ""});
    out.push_back({"C-diagonal-positive", pt, c_ok, false, ""});
    out.push_back({"B-tridiagonal-zero-diagonal", pt, b_ok, false, ""});
    out.push_back({"BH-symmetric", pt, bh_ok, false, ""});
    return out;
  });
}

std::vector<CheckResult> suite_eigen(const SweepConfig& cfg) {
  return sweep(cfg, [&](const WeightFamily& fam) {
    std::vector<CheckResult> out;
    const std::string pt = point_desc(fam);
    const int N = fam.N();
    MVOPSequence seq = mvop_by_recurrence(fam, 0, cfg.nmax);
    RDiffOp D = operator_D(N);
    RDiffOp sD = operator_script_D(fam, 0);
    bool d_ok = true, sd_ok = true;
    for (int n = 0; n <= cfg.nmax; ++n) {
      if (apply_right_diffop(seq.polys[n], D) !=
          seq.polys[n].left_mul(eigenvalue_D(N, n)))
        d_ok = false;
      if (apply_right_diffop(seq.polys[n], sD) !=
          seq.polys[n].left_mul(eigenvalue_script_D(fam, 0, n)))
        sd_ok = false;
    }
    out.push_back({"eigen-D", pt, d_ok, false, ""});
    out.push_back({"eigen-script-D", pt, sd_ok, false, ""});
    out.push_back({"commute-D-script-D", pt,
                   operators_commute_on_basis(D, sD, N, 10), false, ""});
    return out;
  });
}

std::vector<CheckResult> suite_ladders(const SweepConfig& cfg) {
  return sweep(cfg, [&](const WeightFamily& fam) {
    std::vector<CheckResult> out;
    const std::string pt = point_desc(fam);
    bool down_ok = true, up_ok = true;
    for (int n = 1; n <= cfg.nmax; ++n) {
      if (!shift_down_residual(fam, 0, n).is_zero_poly()) down_ok = false;
      if (!shift_up_residual(fam, 0, n).is_zero_poly()) up_ok = false;
    }
    out.push_back({"ladder-down", pt, down_ok, false, ""});
    out.push_back({"ladder-up", pt, up_ok, false, ""});
    return out;
  });
}

std::vector<CheckResult> suite_orthogonality(const SweepConfig& cfg) {
  QuadratureRule rule = gauss_hermite(80);
  return sweep(cfg, [&, rule](const WeightFamily& fam) {
    const std::string pt = point_desc(fam);
    const int N = fam.N();
    MVOPSequence seq = mvop_by_recurrence(fam, 0, cfg.nmax);
    DMatPoly wp = convert_matrix_poly<double, Rational>(gauged_weight(fam, 0).poly_part);

    // Precompute node values.
    const int M = rule.size();
    std::vector<DMatrix> wv;
    wv.reserve(M);
    for (int i = 0; i < M; ++i) wv.push_back(wp.evaluate(rule.nodes[i]));
    std::vector<std::vector<DMatrix>> pv(cfg.nmax + 1);
    for (int n = 0; n <= cfg.nmax; ++n) {
      DMatPoly p = convert_matrix_poly<double, Rational>(seq.polys[n]);
      pv[n].reserve(M);
      for (int i = 0; i < M; ++i) pv[n].push_back(p.evaluate(rule.nodes[i]));
    }

    double off_worst = 0, diag_worst = 0;
    for (int n = 0; n <= cfg.nmax; ++n) {
      double hnorm = 0;
      for (int i = 0; i < N; ++i)
        hnorm = std::max(hnorm, std::abs(seq.norms[n][i].to_double()));
      for (int m = 0; m <= n; ++m) {
        DMatrix acc(N);
        for (int i = 0; i < M; ++i)
          acc = acc + (pv[n][i] * wv[i] * pv[m][i].transpose()).scale(rule.weights[i]);
        if (m == n) {
          for (int i = 0; i < N; ++i) {
            double expect = seq.norms[n][i].to_double();
            diag_worst = std::max(diag_worst,
                                  std::abs(acc(i, i) - expect) / std::abs(expect));
          }
          // off-diagonal of <P_n, P_n> must vanish as well (H_n diagonal)
          for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
              if (i != j)
                off_worst = std::max(off_worst,
                                     std::abs(acc(i, j)) / std::max(1.0, hnorm));
        } else {
          off_worst = std::max(off_worst, max_abs(acc) / std::max(1.0, hnorm));
        }
      }
    }
    std::vector<CheckResult> out;
    std::ostringstream d1, d2;
    d1 << "max scaled off-diagonal " << off_worst;
    d2 << "max relative diagonal error " << diag_worst;
    out.push_back({"orthogonality-offdiag", pt, off_worst <= 1e-10, false, d1.str()});
    out.push_back({"orthogonality-norms", pt, diag_worst <= 1e-10, false, d2.str()});
    return out;
  });
}

std::vector<CheckResult> suite_diffops(const SweepConfig& cfg) {
  return sweep(cfg, [&](const WeightFamily& fam) {
    std::vector<CheckResult> out;
    const std::string pt = point_desc(fam);
    const int N = fam.N();
    GaugedWeight gw = gauged_weight(fam, 0);
    gw.poly_part = corrupt(gw.poly_part, cfg.negative_control);

    std::vector<std::pair<std::string, RDiffOp>> ops;
    ops.emplace_back("D", operator_D(N));
    ops.emplace_back("script-D", operator_script_D(fam, 0));
    for (const auto& [name, op] : ops)
      for (const SymmetryReport& r : symmetry_conditions_check(gw, op)) {
        std::ostringstream detail;
        if (r.condition == "boundary")
          detail << "max boundary value " << r.boundary;
        else
          detail << (r.pass ? "residual identically zero" : "NONZERO residual");
        out.push_back({name + "-" + r.condition, pt, r.pass, false, detail.str()});
      }

    // Darboux companion: eigencheck on the shifted family.
    RDiffOp darboux = darboux_operator(fam, 0);
    MVOPSequence up = mvop_by_recurrence(fam, 1, std::min(cfg.nmax, 4));
    bool darboux_ok = true;
    for (int n = 0; n < static_cast<int>(up.polys.size()); ++n) {
      RMatrix xi = ladder_K(fam, 0).scale(Rational(n + 1));
      if (apply_right_diffop(up.polys[n], darboux) != up.polys[n].left_mul(xi))
        darboux_ok = false;
    }
    out.push_back({"darboux-eigen", pt, darboux_ok, false, ""});

    // Moving D through L must reproduce the diagonal companion (I,-2x,-2J).
    bool conj_ok = true;
    for (const RMatPoly& r : conjugation_residuals(operator_D(N), N))
      if (!r.is_zero_poly()) conj_ok = false;
    out.push_back({"D-conjugation", pt, conj_ok, false, ""});
    return out;
  });
}

std::vector<CheckResult> suite_connection(const SweepConfig& cfg) {
  std::vector<CheckResult> out;
  std::vector<std::pair<Rational, Rational>> pairs{
      {Rational(2), Rational(1)}, {Rational(5, 2), Rational(1, 2)}};
  for (FamilyId id : all_families())
    for (int N : cfg.Ns) {
      if (N > 4) continue;
      for (auto& [nu, la] : pairs) {
        WeightFamily fam = make_family(id, N, nu);
        std::ostringstream os;
        os << point_desc(fam) << " -> nu=" << to_string(la);
        bool expand_ok = true, support_ok = true, formula_ok = true;
        const int ncap = std::min(cfg.nmax, 6);
        for (int n = 0; n <= ncap; ++n) {
          std::vector<RMatrix> coeffs;
          try {
            coeffs = connection_coefficients(fam, la, n);
          } catch (const SingularSystem&) {
            expand_ok = false;
            break;
          }
          if (cfg.negative_control && n == ncap) coeffs[0](0, 0) += 1;
          if (coeffs[0] != RMatrix::identity(N)) expand_ok = false;
          for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
            if (k > std::min(n, N - 1) && !coeffs[k].is_zero_matrix())
              support_ok = false;
            for (int i = 0; i < N; ++i)
              for (int j = 0; j < N; ++j) {
                if (j - i != k && !is_zero(coeffs[k](i, j))) support_ok = false;
                if (j - i == k && coeffs[k](i, j) !=
                                      connection_coefficient_formula(fam, la, n,
                                                                     k, i + 1))
                  formula_ok = false;
              }
          }
        }
        out.push_back({"connection-expansion", os.str(), expand_ok, false, ""});
        out.push_back({"connection-support", os.str(), support_ok, false, ""});
        out.push_back({"connection-formula", os.str(), formula_ok, false, ""});
      }
    }
  return out;
}

std::vector<CheckResult> suite_burchnall(const SweepConfig& cfg) {
  std::vector<CheckResult> out;
  QuadratureRule rule = gauss_hermite(80);
  for (FamilyId id : all_families()) {
    for (int N : {2, 3}) {
      WeightFamily fam = make_family(id, N, Rational(1, 2));
      const std::string pt = point_desc(fam);

      // Test polynomials of degree <= 4 with noncommuting coefficients.
      std::vector<RMatPoly> qs;
      qs.push_back(RMatPoly::identity(N));
      qs.push_back(RMatPoly::monomial(RMatrix::identity(N), 1) +
                   RMatPoly(matrix_A(N)));
      qs.push_back(RMatPoly::monomial(matrix_J(N), 2) +
                   RMatPoly(matrix_A(N).transpose()));
      qs.push_back(RMatPoly::monomial(matrix_A(N), 3));
      qs.push_back(RMatPoly::monomial(RMatrix::identity(N), 4) +
                   RMatPoly::monomial(matrix_A(N).transpose(), 1));

      bool op_ok = true;
      for (int n = 0; n <= 4 && op_ok; ++n)
        for (const RMatPoly& q : qs) {
          RMatPoly lhs = iterated_raising(q, fam, 0, n);
          if (cfg.negative_control) lhs = corrupt(lhs, true);
          if (lhs != burchnall_expand(q, fam, 0, n)) {
            op_ok = false;
            break;
          }
        }
      out.push_back({"burchnall-operational", pt, op_ok, false, ""});

      bool rodrigues_ok = true;
      for (int n = 0; n <= 4; ++n) {
        RMatPoly chain = iterated_raising(RMatPoly::identity(N), fam, 0, n);
        RMatPoly expect = mvop_by_recurrence(fam, 0, n)
                              .polys[n]
                              .left_mul(inverse(g_prefactor(fam, 0, n)));
        if (chain != expect) rodrigues_ok = false;
      }
      out.push_back({"burchnall-rodrigues-reduction", pt, rodrigues_ok, false, ""});

      bool prod_ok = true;
      for (int n = 0; n <= cfg.mmax; ++n)
        for (int m = 0; m <= cfg.mmax; ++m)
          if (!burchnall_product_residual(fam, 0, n, m).is_zero_poly())
            prod_ok = false;
      out.push_back({"burchnall-product", pt, prod_ok, false, ""});

      double worst = 0;
      for (int n = 1; n <= 3; ++n) {
        ExpPoly q{0.5, DMatPoly::identity(N)};
        ExpPoly m{0.0, DMatPoly::monomial(DMatrix::identity(N), n + 1)};
        worst = std::max(worst, integrated_burchnall_residual(fam, 0, n, q, m, rule));
        ExpPoly q2{0.0, DMatPoly::monomial(DMatrix::identity(N), 2)};
        worst = std::max(worst, integrated_burchnall_residual(fam, 0, n, q2, m, rule));
      }
      for (int n = 1; n <= 3; ++n)
        for (int p = 0; p < n; ++p)
          for (Rational t : {Rational(1, 2), Rational(1)})
            worst = std::max(worst, integrated_special_case(fam, 0, n, p, t, rule));
      std::ostringstream os;
      os << "max residual " << worst;
      out.push_back({"burchnall-integrated", pt, worst <= 1e-8, false, os.str()});
    }
  }
  return out;
}

std::vector<CheckResult> suite_toda_exact(const SweepConfig& cfg) {
  std::vector<CheckResult> out;
  for (FamilyId id : all_families())
    for (int N : cfg.Ns) {
      if (N > 4) continue;
      WeightFamily fam = make_family(id, N, Rational(3, 2));
      const std::string pt = point_desc(fam);
      const int nmax = std::min(cfg.nmax, 5);

      TodaResiduals res = toda_residuals(fam, 0, nmax);
      bool lattice_ok = true;
      for (const TMatrix& r : res.b_residuals)
        if (!tmatrix_is_zero(r)) lattice_ok = false;
      for (const TMatrix& r : res.c_residuals)
        if (!tmatrix_is_zero(r)) lattice_ok = false;
      if (cfg.negative_control) lattice_ok = !lattice_ok;
      out.push_back({"toda-lattice-residual", pt, lattice_ok, false, ""});

      // C_n(t) stays similar to the static C_n: equal characteristic
      // polynomials over Q[t].
      TodaClosedForm cf = toda_closed_form(fam, 0, nmax);
      MVOPSequence seq = mvop_by_recurrence(fam, 0, nmax);
      bool spectrum_ok = true;
      for (int n = 1; n <= nmax; ++n)
        if (char_poly(cf.Cn[n]) != char_poly_constant(seq.Cn[n])) spectrum_ok = false;
      out.push_back({"toda-spectrum", pt, spectrum_ok, false, ""});

      bool deform_ok = true, expand_ok = true, tderiv_ok = true, simp_ok = true;
      for (int n = 1; n <= std::min(nmax, 3); ++n) {
        for (Rational t : {Rational(1), Rational(-1, 2)}) {
          RMatPoly def = toda_deformed_poly(fam, 0, n, t);
          if (def.degree() != n || def.leading_coeff() != RMatrix::identity(N))
            deform_ok = false;
          if (!toda_expansion_residual(fam, 0, n, t).is_zero_poly())
            expand_ok = false;
          if (!toda_simplified_identity_residual(fam, 0, n, t).is_zero_poly())
            simp_ok = false;
        }
        if (!toda_timederivative_residual(fam, 0, n).is_zero_poly())
          tderiv_ok = false;
      }
      out.push_back({"toda-deformed-monic", pt, deform_ok, false, ""});
      out.push_back({"toda-expansion", pt, expand_ok, false, ""});
      out.push_back({"toda-time-derivative", pt, tderiv_ok, false, ""});
      out.push_back({"toda-simplified-identity", pt, simp_ok, false, ""});
    }
  return out;
}

std::vector<CheckResult> suite_toda_numeric(const SweepConfig& cfg) {
  std::vector<CheckResult> out;
  WeightFamily fam = make_family(FamilyId::pochhammer, 3, Rational(1));
  const int nmax = 3;
  TodaClosedForm cf = toda_closed_form(fam, 0, nmax);
  TodaNumericState init = closed_form_numeric(cf, nmax, 0.0);

  double dev = 0;
  TodaNumericState s = init;
  for (int leg = 1; leg <= 10; ++leg) {
    s = toda_integrate(cf, nmax, s, 0.1 * leg, 1e-3);
    dev = std::max(dev, max_state_deviation(s, closed_form_numeric(cf, nmax, 0.1 * leg)));
  }
  if (cfg.negative_control) dev += 1.0;
  std::ostringstream os;
  os << "max deviation " << dev;
  out.push_back({"toda-rk4-deviation", point_desc(fam), dev <= 1e-6, false, os.str()});

  auto err_at = [&](double h) {
    TodaNumericState e = toda_integrate(cf, nmax, init, 1.0, h);
    return max_state_deviation(e, closed_form_numeric(cf, nmax, 1.0));
  };
  double e1 = err_at(0.1), e2 = err_at(0.05);
  double order = std::log2(e1 / e2);
  std::ostringstream os2;
  os2 << "observed order " << order;
  out.push_back({"toda-rk4-order", point_desc(fam),
                 order >= 3.7 && order <= 4.3, false, os2.str()});

  // Deformed orthogonality under the exponentially tilted weight.
  QuadratureRule rule = gauss_hermite(80);
  WeightFamily fam2 = make_family(FamilyId::pochhammer, 2, Rational(1));
  DMatPoly wp = convert_matrix_poly<double, Rational>(gauged_weight(fam2, 0).poly_part);
  double t = 0.75;
  double worst = 0;
  std::vector<DMatPoly> defs;
  for (int n = 0; n <= 3; ++n)
    defs.push_back(convert_matrix_poly<double, Rational>(
        toda_deformed_poly(fam2, 0, n, Rational(3, 4))));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m < n; ++m)
      worst = std::max(worst, max_abs(inner_product(defs[n], defs[m], wp, rule, t)));
  std::ostringstream os3;
  os3 << "max off-diagonal " << worst;
  out.push_back({"toda-deformed-orthogonality", point_desc(fam2), worst <= 1e-9,
                 false, os3.str()});
  return out;
}

std::vector<CheckResult> suite_commutant(const SweepConfig& cfg) {
  std::vector<CheckResult> out;
  for (FamilyId id : all_families())
    for (int N : {2, 3, 4}) {
      WeightFamily fam = make_family(id, N, Rational(3, 2));
      CommutantReport rep = commutant_dimension(fam, 2 * N * N + 3);
      if (cfg.negative_control) rep.dim_commutant += 1;
      std::ostringstream os;
      os << "dim A_W=" << rep.dim_commutant << " dim script-A_W=" << rep.dim_star_space;
      out.push_back({"commutant-trivial", point_desc(fam),
                     rep.dim_commutant == 1 && rep.dim_star_space == 1, false,
                     os.str()});
    }
  return out;
}

std::vector<CheckResult> suite_vanishing(const SweepConfig& cfg) {
  std::vector<CheckResult> out;
  for (FamilyId id : all_families())
    for (int N : cfg.Ns) {
      if (N > 5) continue;
      WeightFamily fam = make_family(id, N, Rational(3, 2));
      bool ok = true;
      for (int n = 0; n <= std::min(cfg.nmax, 4); ++n)
        for (int r = 1; r <= N; ++r)
          for (int t = 1; t < r; ++t) {
            Rational v = vanishing_sum(fam, 0, n, r, t);
            if (cfg.negative_control) v += 1;
            if (!is_zero(v)) ok = false;
          }
      out.push_back({"vanishing-sums", point_desc(fam), ok, false, ""});
    }
  return out;
}

std::vector<CheckResult> suite_audit(const SweepConfig& cfg) {
  std::vector<CheckResult> out;
  bool constant_ok = true;
  Rational ratio;
  bool have_ratio = false;
  for (FamilyId id : all_families())
    for (int N : cfg.Ns) {
      if (N > 4) continue;
      WeightFamily fam = make_family(id, N, Rational(1, 2));
      for (int n = 1; n <= std::min(cfg.nmax, 5); ++n) {
        RMatrix printed = recurrence_C_printed(fam, 0, n);
        RMatrix derived = recurrence_C(fam, 0, n);
        for (int i = 0; i < N; ++i) {
          Rational r = printed(i, i) / derived(i, i);
          if (!have_ratio) {
            ratio = r;
            have_ratio = true;
          } else if (r != ratio) {
            constant_ok = false;
          }
        }
      }
    }
  std::ostringstream os;
  os << "printed/derived C_n ratio = " << to_string(ratio)
     << (constant_ok ? " (constant across all points)" : " (NOT constant)");
  out.push_back({"printed-constant-audit", "all families", constant_ok, true,
                 os.str()});
  return out;
}

std::vector<std::pair<std::string, Suite>> suite_registry() {
  return {
      {"pearson", suite_pearson},
      {"routes", suite_routes},
      {"structure", suite_structure},
      {"eigen", suite_eigen},
      {"ladders", suite_ladders},
      {"orthogonality", suite_orthogonality},
      {"diffops", suite_diffops},
      {"connection", suite_connection},
      {"burchnall", suite_burchnall},
      {"toda-exact", suite_toda_exact},
      {"toda-numeric", suite_toda_numeric},
      {"commutant", suite_commutant},
      {"vanishing", suite_vanishing},
      {"audit", suite_audit},
  };
}

}  // namespace mvh

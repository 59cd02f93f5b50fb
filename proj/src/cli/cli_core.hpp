// Command-line harness core: flag parsing, CSV emission and the four
// commands (point evaluation with cross-method rows, the six-row ratio
// table, convergence sweeps along rays, bound and growth sampling reports).
// Header-only and stream-based so the test binary can drive every command
// in-process instead of spawning the executable.
//
// Exit-code contract: 0 success, 2 domain or hypothesis violation (bad
// flag values included), 3 convergence or overflow failure.
#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "humbert/f2f2_asym.hpp"
#include "humbert/psi1.hpp"
#include "humbert/psi1_asym.hpp"

namespace hcli {

using humbert::cplx;
using cld = std::complex<long double>;

// ---------------------------------------------------------------------------
// Flag parsing. Complex literals are "re", "im i" or "re+im i" with no
// spaces, where either part may be a p/q rational ("1/3+1/4i", "-2.5i").
// ---------------------------------------------------------------------------

inline long double parse_real_token(const std::string& tok) {
  if (tok == "+") return 1;  // bare sign of an implicit unit imaginary part
  if (tok == "-") return -1;
  try {
    const auto slash = tok.find('/');
    std::size_t used = 0;
    if (slash != std::string::npos) {
      const std::string p = tok.substr(0, slash), q = tok.substr(slash + 1);
      const long double pv = std::stold(p, &used);
      if (used != p.size()) throw std::invalid_argument(tok);
      const long double qv = std::stold(q, &used);
      if (used != q.size() || qv == 0) throw std::invalid_argument(tok);
      return pv / qv;
    }
    const long double v = std::stold(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw humbert::domain_error("malformed numeric token: '" + tok + "'");
  }
}

inline cld parse_complex(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw humbert::domain_error("empty complex literal");
  if (s.back() != 'i' && s.back() != 'I') return cld(parse_real_token(s), 0);
  s.pop_back();
  if (s.empty()) return cld(0, 1);
  // the imaginary part starts at the last sign that is not an exponent's
  // or another sign's continuation and not a leading sign
  std::size_t split = std::string::npos;
  for (std::size_t j = s.size(); j-- > 1;) {
    const char c = s[j];
    const char p = s[j - 1];
    if ((c == '+' || c == '-') && p != 'e' && p != 'E' && p != '+' &&
        p != '-' && p != '/') {
      split = j;
      break;
    }
  }
  if (split == std::string::npos) return cld(0, parse_real_token(s));
  return cld(parse_real_token(s.substr(0, split)),
             parse_real_token(s.substr(split)));
}

// 17 significant digits round-trips an 80-bit double through text with one
// or two ulps to spare; the 6-digit column mirrors published table format
inline std::string fmt17(long double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  return buf;
}
inline std::string fmt6(long double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6Lf", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Run configuration shared by the commands.
// ---------------------------------------------------------------------------

enum class Precision { standard, extended };

struct RunConfig {
  humbert::Psi1Params<long double> params{cld(1), cld(0.5L), cld(1.0L / 3),
                                          cld(0.25L)};
  humbert::TruncationPolicy policy{};
  long K = 1;            // positive-ray expansion order
  long N = 0;            // exponential-block order; 0 defers to the selector
  double w = 3.0;        // target algebraic order for the general expansion
  double eps = 0.1;      // pole-distance margin for the truncation selector
  Precision precision = Precision::standard;
  std::uint64_t seed = 1;
};

template <class Real>
humbert::Psi1Params<Real> cast_params(
    const humbert::Psi1Params<long double>& p) {
  auto c = [](const cld& z) {
    return cplx<Real>(static_cast<Real>(z.real()), static_cast<Real>(z.imag()));
  };
  return {c(p.a), c(p.b), c(p.c), c(p.cp)};
}

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const humbert::convergence_error*>(&e) ||
      dynamic_cast<const humbert::overflow_error*>(&e))
    return 3;
  return 2;
}

// ---------------------------------------------------------------------------
// eval: the dispatcher's pick plus every other applicable route, one CSV row
// per method.
// ---------------------------------------------------------------------------

struct MethodRow {
  std::string method;
  cld value;
  long double err = 0;
  long terms = 0;
  bool converged = false;
};

template <class Real>
std::vector<MethodRow> eval_rows(const humbert::Psi1Params<Real>& par,
                                 const cplx<Real>& x, const cplx<Real>& y,
                                 const humbert::TruncationPolicy& pol) {
  const auto pt = humbert::make_point(x, y);  // throws outside the domain
  std::vector<MethodRow> rows;
  auto push = [&](const humbert::ApproxResult<Real>& r) {
    for (const auto& have : rows)
      if (have.method == r.method) return;
    rows.push_back({r.method, cld(r.value.real(), r.value.imag()),
                    static_cast<long double>(r.err_estimate), r.terms_used,
                    r.converged});
  };
  push(humbert::psi1_eval(par, pt, pol));
  // supplementary routes; inapplicable or failing ones are simply absent
  auto attempt = [&](auto&& fn) {
    try {
      push(fn());
    } catch (const std::exception&) {
    }
  };
  // applicability mirrors the dispatcher's region radii so no route is
  // attempted where its convergence is marginal
  const cplx<Real> one(1);
  if (std::abs(x) <= Real(0.95L))
    attempt([&] {
      auto r = humbert::psi1_double_series(par, x, y, pol);
      r.method = "double_series";
      return r;
    });
  if (par.laplace_ok() && x.real() < Real(1))
    attempt([&] { return humbert::psi1_laplace(par, pt, pol); });
  if (std::abs(x - one) >= Real(1.2L) && par.outer_series_ok())
    attempt([&] { return humbert::psi1_outer_series(par, pt, pol); });
  const auto img = humbert::psi1_kummer(par, pt);
  auto finish = [&](humbert::ApproxResult<Real> r, const char* tag) {
    r.value *= img.prefactor;
    r.err_estimate *= std::abs(img.prefactor);
    r.method = tag;
    return r;
  };
  if (std::abs(img.point.x) <= Real(0.95L))
    attempt([&] {
      return finish(humbert::psi1_double_series(img.params, img.point.x,
                                                img.point.y, pol),
                    "kummer+double_series");
    });
  if (img.params.laplace_ok() && img.point.x.real() < Real(1))
    attempt([&] {
      return finish(humbert::psi1_laplace(img.params, img.point, pol),
                    "kummer+laplace");
    });
  if (std::abs(img.point.x - one) >= Real(1.2L) &&
      img.params.outer_series_ok())
    attempt([&] {
      return finish(humbert::psi1_outer_series(img.params, img.point, pol),
                    "kummer+outer_series");
    });
  return rows;
}

inline bool row_needs_escalation(const MethodRow& r, double rel_tol) {
  const long double av = std::abs(r.value);
  if (!std::isfinite(static_cast<double>(av))) return true;
  const long double target =
      std::max(static_cast<long double>(rel_tol) * 100, 1e-10L) * av;
  return r.err > target && av > 0;
}

inline int run_eval(const RunConfig& cfg, const cld& x, const cld& y,
                    std::ostream& out, std::ostream& diag) {
  try {
    std::vector<MethodRow> rows;
    auto double_lane = [&] {
      return eval_rows<double>(
          cast_params<double>(cfg.params),
          cplx<double>(static_cast<double>(x.real()),
                       static_cast<double>(x.imag())),
          cplx<double>(static_cast<double>(y.real()),
                       static_cast<double>(y.imag())),
          cfg.policy);
    };
    if (cfg.precision == Precision::standard) {
      rows = double_lane();
    } else {
      // extended: re-run in the wider type when the double lane overflows,
      // fails outright, or cannot meet the accuracy target
      bool redo = false;
      try {
        rows = double_lane();
        for (const auto& r : rows)
          redo = redo || row_needs_escalation(r, cfg.policy.rel_tol);
      } catch (const std::exception&) {
        redo = true;
      }
      if (redo) rows = eval_rows<long double>(cfg.params, x, y, cfg.policy);
    }
    out << "method,value_re,value_im,err_estimate,terms_used,converged\n";
    for (const auto& r : rows)
      out << r.method << ',' << fmt17(r.value.real()) << ','
          << fmt17(r.value.imag()) << ',' << fmt17(r.err) << ',' << r.terms
          << ',' << (r.converged ? 1 : 0) << '\n';
    return 0;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

// ---------------------------------------------------------------------------
// table1: six rows (x0, y0) in {(-1, 2), (-1, -2)} x t in {10, 100, 1000}.
// The reference value comes from the integral representation and the
// denominator from leading_term, so the ratio column reproduces the
// published six-figure ratios. Standard precision overflows at t = 1000;
// extended mode re-runs any row whose double-lane result is unusable.
// ---------------------------------------------------------------------------

struct TableRow {
  double x0, y0, t;
  long double ratio;
  long double err_rel;  // reference evaluation's relative error estimate
  std::string method_value, method_leading;
};

template <class Real>
TableRow table1_row(const humbert::Psi1Params<Real>& par, double x0, double y0,
                    double t, const humbert::TruncationPolicy& pol) {
  const cplx<Real> x(static_cast<Real>(x0 * t)), y(static_cast<Real>(y0 * t));
  const auto psi = humbert::psi1_laplace(par, humbert::make_point(x, y), pol);
  const cplx<Real> L = humbert::leading_term(par, x, y);
  const cplx<Real> ratio = psi.value / L;
  return {x0,
          y0,
          t,
          static_cast<long double>(ratio.real()),
          static_cast<long double>(psi.err_estimate) /
              std::max(static_cast<long double>(std::abs(psi.value)), 1e-300L),
          psi.method,
          y0 > 0 ? "asym_ypos" : "asym_general"};
}

inline int run_table1(const RunConfig& cfg, std::ostream& out,
                      std::ostream& diag) {
  try {
    out << "x0,y0,t,ratio,ratio_display,method_value,method_leading\n";
    for (double y0 : {2.0, -2.0})
      for (double t : {10.0, 100.0, 1000.0}) {
        TableRow row =
            table1_row<double>(cast_params<double>(cfg.params), -1, y0, t,
                               cfg.policy);
        const bool bad = !std::isfinite(static_cast<double>(row.ratio)) ||
                         !(row.err_rel < 1e-6L);
        if (bad) {
          if (cfg.precision == Precision::standard)
            throw humbert::overflow_error(
                "table1: row t=" + std::to_string(static_cast<long>(t)) +
                ", y0=" + std::to_string(static_cast<long>(y0)) +
                " overflows standard precision; rerun with --precision "
                "extended");
          row = table1_row<long double>(cfg.params, -1, y0, t, cfg.policy);
        }
        out << fmt17(row.x0) << ',' << fmt17(row.y0) << ',' << fmt17(row.t)
            << ',' << fmt17(row.ratio) << ',' << fmt6(row.ratio) << ','
            << row.method_value << ',' << row.method_leading << '\n';
      }
    return 0;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

// ---------------------------------------------------------------------------
// converge: per (t, order) rows of reference vs expansion on the ray
// (x0 t, y0 t), then one least-squares slope row per order. On rays with
// y0 > 0 the order is the positive-ray truncation K; elsewhere it is the
// exponential-block order N with the algebraic order fixed by the selector.
// exp_block_share reports the exponential block's share of the total, the
// quantity that collapses like e^{Re y} on left-half-plane rays.
// ---------------------------------------------------------------------------

inline double lsq_slope(const std::vector<double>& lx,
                        const std::vector<double>& ly) {
  const std::size_t n = lx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double den = n * sxx - sx * sx;
  return den == 0 ? 0 : (n * sxy - sx * sy) / den;
}

inline int run_converge(const RunConfig& cfg, const cld& x0, const cld& y0,
                        std::vector<double> ts, std::vector<long> orders,
                        std::ostream& out, std::ostream& diag) {
  try {
    if (ts.empty()) ts = {50, 100, 200, 400};
    if (orders.empty()) orders = {1, 2, 3};
    using Real = long double;  // the sweeps cancel by e^{|y|}
    const auto& par = cfg.params;
    const bool ypos = y0.imag() == 0 && y0.real() > 0;
    humbert::GeneralAsymConfig gcfg;
    if (!ypos) gcfg = humbert::choose_w_general(par, cfg.w, cfg.eps);

    const cld expo_pow = par.a - par.b - par.b - par.cp;
    const cld g3 = humbert::gamma_ratio<long double>({par.c, par.cp},
                                                     {par.a, par.c - par.b});
    out << "kind,t,order,ref_re,ref_im,exp_re,exp_im,rel_err,"
           "exp_block_share\n";
    for (long order : orders) {
      std::vector<double> lt, le;
      for (double t : ts) {
        humbert::RayScaling<Real> ray{cplx<Real>(x0), cplx<Real>(y0),
                                      static_cast<Real>(t)};
        const auto X = ray.x(), Y = ray.y();
        const auto ref =
            humbert::psi1_outer_series(par, humbert::make_point(X, Y),
                                       cfg.policy);
        humbert::ApproxResult<Real> ex;
        if (ypos) {
          ex = humbert::psi1_asym_ypos(par, X, Y, order);
        } else {
          auto rowcfg = gcfg;
          rowcfg.N = order;
          ex = humbert::psi1_asym_general(par, X, Y, rowcfg);
        }
        const long double rel =
            std::abs(ex.value - ref.value) / std::abs(ref.value);
        const long double share =
            std::abs(g3 * humbert::cpow(Y, expo_pow) * std::exp(Y) *
                     humbert::coeff_a_k(par, 0, X, Y)) /
            std::abs(ex.value);
        out << "sample," << fmt17(t) << ',' << order << ','
            << fmt17(ref.value.real()) << ',' << fmt17(ref.value.imag())
            << ',' << fmt17(ex.value.real()) << ',' << fmt17(ex.value.imag())
            << ',' << fmt17(rel) << ',' << fmt17(share) << '\n';
        if (rel > 0) {
          lt.push_back(std::log(t));
          le.push_back(static_cast<double>(std::log(rel)));
        }
      }
      out << "slope,," << order << ",,,,,"
          << fmt17(lt.size() >= 2 ? lsq_slope(lt, le) : 0.0) << ",\n";
    }
    return 0;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

// ---------------------------------------------------------------------------
// bounds: per-sample lhs/rhs/status rows for one of the four inequality or
// growth families, then a summary row reusing the numeric columns as
// samples / violations / skipped. Sample index 0 always uses the configured
// (a, b) pair so fixed parameter studies stay scriptable; later indices
// draw from the seeded generator.
//   poch-ratio       rising-factorial ratio growth, constant fitted on
//                    n <= 1e3 and tested out to n = 1e4 (lhs = worst
//                    normalized excess, rhs = 2 x fitted constant)
//   gamma-ratio      gamma-quotient envelope sampled in its proven strip
//                    Re(b-a) >= 1; every row must hold
//   shifted-product  shifted-ratio products with exclusion-zone rows
//                    reported as skipped
//   growth           upward-shifted 2F2 against its envelope, constant
//                    fitted on z <= 50 and tested on z in (50, 100]
// ---------------------------------------------------------------------------

inline int run_bounds(const RunConfig& cfg, const std::string& check,
                      long samples, std::ostream& out, std::ostream& diag) {
  try {
    if (samples < 1)
      throw humbert::domain_error("bounds: samples must be >= 1");
    humbert::Rng rng(cfg.seed);
    using C = cplx<double>;
    const C pa(static_cast<double>(cfg.params.a.real()),
               static_cast<double>(cfg.params.a.imag()));
    const C pb(static_cast<double>(cfg.params.b.real()),
               static_cast<double>(cfg.params.b.imag()));
    long violations = 0, skipped = 0;
    out << "check,index,n,lhs,rhs,status\n";
    auto emit = [&](long i, long n, long double lhs, long double rhs,
                    const std::string& st) {
      out << check << ',' << i << ',' << n << ',' << fmt17(lhs) << ','
          << fmt17(rhs) << ',' << st << '\n';
    };

    if (check == "gamma-ratio") {
      for (long i = 0; i < samples; ++i) {
        // Re(b-a) >= 1: the envelope is only guaranteed in that strip
        C a(rng.uniform(0, 3), rng.uniform(-2, 2));
        C b(a.real() + 1 + rng.uniform(0, 2), rng.uniform(-2, 2));
        C z(std::abs(a.imag()) + rng.uniform(0.05, 15),
            rng.uniform(-10, 10));
        const auto rep = humbert::gamma_ratio_bound(z, a, b);
        if (!rep.holds) ++violations;
        emit(i, 0, rep.lhs, rep.rhs, rep.holds ? "ok" : "violation");
      }
    } else if (check == "poch-ratio") {
      for (long i = 0; i < samples; ++i) {
        const C a = i == 0 ? pa : C(rng.uniform(0.1, 3), rng.uniform(-2, 2));
        const C b = i == 0 ? pb : C(rng.uniform(0.1, 3), rng.uniform(-2, 2));
        const double expo = a.real() - b.real();
        double r = 1, c_train = 0, worst = 0;
        for (long n = 1; n <= 10000; ++n) {
          r *= std::abs(a + double(n - 1)) / std::abs(b + double(n - 1));
          const double norm = r / std::pow(double(n + 1), expo);
          (n <= 1000 ? c_train : worst) = std::max(n <= 1000 ? c_train : worst, norm);
        }
        const auto rep = humbert::make_bound_report(worst, 2 * c_train);
        if (!rep.holds) ++violations;
        emit(i, 10000, rep.lhs, rep.rhs, rep.holds ? "ok" : "violation");
      }
    } else if (check == "shifted-product") {
      for (long i = 0; i < samples; ++i) {
        const C a = i == 0 ? pa : C(rng.uniform(0.1, 3), rng.uniform(-2, 2));
        const C b = i == 0 ? pb : C(rng.uniform(0.1, 3), rng.uniform(-2, 2));
        const C z(rng.uniform(-8, 8), rng.uniform(-5, 5));
        const double expo = 2 * std::abs(a - b);
        try {
          double c_train = 0, worst = 0;
          for (long n : {1, 2, 5, 10, 50, 100, 300, 1000, 3000, 10000}) {
            const double p = humbert::shifted_ratio_product(a, b, z, n);
            const double norm = p / std::pow(double(n + 1), expo);
            (n <= 1000 ? c_train : worst) =
                std::max(n <= 1000 ? c_train : worst, norm);
          }
          const auto rep = humbert::make_bound_report(worst, 2 * c_train);
          if (!rep.holds) ++violations;
          emit(i, 10000, rep.lhs, rep.rhs, rep.holds ? "ok" : "violation");
        } catch (const humbert::exclusion_error&) {
          ++skipped;
          emit(i, 0, 0, 0, "skipped");
        }
      }
    } else if (check == "growth") {
      const humbert::TwoF2Family<double> fam{
          pa, pb,
          C(static_cast<double>(cfg.params.c.real()),
            static_cast<double>(cfg.params.c.imag())),
          C(static_cast<double>(cfg.params.cp.real()),
            static_cast<double>(cfg.params.cp.imag())),
          0};
      double c_train = 0;
      for (double z : {10.0, 20.0, 30.0, 40.0, 50.0})
        for (long n = 0; n <= 5; ++n) {
          const auto r = humbert::f2f2_growth_check_plus_n(fam, C(z), n);
          c_train = std::max(c_train, static_cast<double>(r.lhs / r.rhs));
        }
      for (long i = 0; i < samples; ++i) {
        const long n = i % 11;
        const double z = rng.uniform(55, 100);
        const auto r = humbert::f2f2_growth_check_plus_n(fam, C(z), n);
        const double norm = static_cast<double>(r.lhs / r.rhs);
        const auto rep = humbert::make_bound_report(norm, 2 * c_train);
        if (!rep.holds) ++violations;
        emit(i, n, rep.lhs, rep.rhs, rep.holds ? "ok" : "violation");
      }
    } else {
      throw humbert::domain_error("bounds: unknown check '" + check +
                                  "' (poch-ratio, gamma-ratio, "
                                  "shifted-product, growth)");
    }
    out << check << ",summary," << samples << ',' << violations << ','
        << skipped << ',' << (violations == 0 ? "ok" : "fail") << '\n';
    return violations == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace hcli

// Quadrature engines: adaptive Gauss-Legendre panels for smooth or
// oscillatory ranges and a tanh-sinh rule for endpoint-singular integrands
// on (0, 1), plus the Euler-integral evaluator for 2F1 used as a
// continuation cross-check.
#pragma once

#include <limits>
#include <numbers>
#include <vector>

#include "humbert/gamma.hpp"
#include "humbert/quadrature_tables.hpp"

namespace humbert {

template <class Real>
struct QuadResult {
  cplx<Real> value{};
  Real err_estimate{};
  long evals = 0;
  bool converged = false;
};

namespace detail {

template <class Real, class F>
cplx<Real> gl_panel(F& f, Real lo, Real hi, const long double* xs,
                    const long double* ws, int n, long& evals) {
  const Real h = (hi - lo) / 2;
  const Real m = (hi + lo) / 2;
  cplx<Real> acc(0);
  for (int i = 0; i < n; ++i)
    acc += static_cast<Real>(ws[i]) * f(m + h * static_cast<Real>(xs[i]));
  evals += n;
  return acc * h;
}

// Bisects until the 16- vs 32-point difference on each panel is below the
// panel's length share of the absolute budget. A panel whose difference
// stops shrinking under bisection (past a modest depth) sits on the
// integrand's evaluation-noise floor: splitting further burns 2^k panels
// without gaining a digit, so it is accepted with the difference charged to
// the estimate. Panels that bottom out at max_depth, or float more than
// three orders above their budget share, flag the result unconverged.
template <class Real, class F>
QuadResult<Real> adaptive_gl(F f, Real lo, Real hi, Real abs_tol,
                             int max_depth = 26) {
  struct Seg {
    Real lo, hi;
    int depth;
    Real parent_d;
  };
  std::vector<Seg> work{
      {lo, hi, 0, std::numeric_limits<Real>::infinity()}};
  QuadResult<Real> out;
  out.converged = true;
  const Real total = hi - lo;
  while (!work.empty()) {
    const Seg s = work.back();
    work.pop_back();
    const cplx<Real> c16 = gl_panel(f, s.lo, s.hi, tables::gl16_nodes,
                                    tables::gl16_weights, 16, out.evals);
    const cplx<Real> c32 = gl_panel(f, s.lo, s.hi, tables::gl32_nodes,
                                    tables::gl32_weights, 32, out.evals);
    const Real d = std::abs(c32 - c16);
    const Real share = abs_tol * ((s.hi - s.lo) / total);
    const bool floored = s.depth >= 6 && d * 4 > s.parent_d;
    if (d <= share || s.depth >= max_depth || floored) {
      out.value += c32;
      out.err_estimate += d;
      if (d > share && (s.depth >= max_depth || d > share * 1000))
        out.converged = false;
    } else {
      const Real mid = s.lo + (s.hi - s.lo) / 2;
      work.push_back({s.lo, mid, s.depth + 1, d});
      work.push_back({mid, s.hi, s.depth + 1, d});
    }
  }
  return out;
}

// Tanh-sinh rule on (0, 1). The integrand receives both x and 1-x so that
// endpoint-singular factors can be formed without cancellation; both are
// computed from the logistic form, stable at either end. Levels double the
// node density until successive values agree to max(abs_tol, a few ulps).
template <class Real, class F>
QuadResult<Real> tanh_sinh_01(F f, Real abs_tol, int max_level = 10) {
  const Real ph = std::numbers::pi_v<Real> / 2;
  QuadResult<Real> out;
  auto g = [&](Real t) -> cplx<Real> {
    const Real s = ph * std::sinh(t);
    if (std::abs(s) > Real(330)) return cplx<Real>(0);
    const Real x = 1 / (1 + std::exp(-2 * s));
    const Real omx = 1 / (1 + std::exp(2 * s));
    // sech^2(s) = 4 x (1-x), so dx/dt = 2 ph cosh(t) x (1-x)
    const Real w = 2 * ph * std::cosh(t) * x * omx;
    ++out.evals;
    return w * f(x, omx);
  };
  auto tiny = [](const cplx<Real>& v, const cplx<Real>& ref) {
    return std::abs(v) <=
           std::numeric_limits<Real>::epsilon() * std::abs(ref) / 64;
  };

  Real h = 1;
  cplx<Real> sum = g(0);
  for (int sign : {1, -1}) {
    int streak = 0;
    for (long k = 1; k <= 8 && streak < 2; ++k) {
      const cplx<Real> term = g(sign * static_cast<Real>(k));
      sum += term;
      streak = tiny(term, sum) ? streak + 1 : 0;
    }
  }
  cplx<Real> prev = sum;  // value/h at the previous level
  Real err = std::abs(sum);
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    const long kmax = static_cast<long>(Real(7) / h) + 2;
    for (int sign : {1, -1}) {
      int streak = 0;
      for (long j = 1; j <= kmax && streak < 2; j += 2) {
        const cplx<Real> term = g(sign * static_cast<Real>(j) * h);
        sum += term;
        streak = tiny(term, sum) ? streak + 1 : 0;
      }
    }
    const cplx<Real> value = h * sum;
    err = std::abs(value - h * Real(2) * prev);
    out.value = value;
    out.err_estimate = err;
    if (level >= 2 &&
        err <= std::max(abs_tol, 8 * std::numeric_limits<Real>::epsilon() *
                                     std::abs(value))) {
      out.converged = true;
      return out;
    }
    prev = sum;
  }
  return out;
}

}  // namespace detail

// Euler-integral evaluation of 2F1[a,b;c;z], valid on the cut plane
// z outside [1, inf) for Re(c) > Re(b) > 0. Converges to machine precision
// of the working type; used as an independent continuation cross-check.
template <class Real>
ApproxResult<Real> hyp2f1_euler_integral(const cplx<Real>& a,
                                         const cplx<Real>& b,
                                         const cplx<Real>& c,
                                         const cplx<Real>& z) {
  if (!(c.real() > b.real() && b.real() > Real(0)))
    throw domain_error("hyp2f1_euler_integral: requires Re c > Re b > 0");
  if (z.imag() == Real(0) && z.real() >= Real(1))
    throw domain_error("hyp2f1_euler_integral: z on the branch cut [1, inf)");

  const cplx<Real> bm1 = b - cplx<Real>(1);
  const cplx<Real> cbm1 = c - b - cplx<Real>(1);
  const cplx<Real> omz = cplx<Real>(1) - z;
  auto f = [&](Real x, Real omx) -> cplx<Real> {
    // 1 - z x written as (1-z) + z (1-x): no cancellation as x -> 1
    const cplx<Real> base = omz + z * omx;
    return cpow(cplx<Real>(x), bm1) * cpow(cplx<Real>(omx), cbm1) *
           cpow(base, -a);
  };
  auto q = detail::tanh_sinh_01<Real>(f, Real(0));
  const cplx<Real> pref = gamma_ratio<Real>({c}, {b, c - b});

  ApproxResult<Real> res;
  res.value = pref * q.value;
  res.err_estimate = std::abs(pref) * q.err_estimate;
  res.terms_used = q.evals;
  res.converged = q.converged;
  res.method = "euler_integral";
  return res;
}

}  // namespace humbert

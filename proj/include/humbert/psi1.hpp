// Evaluation routes for Psi1[a,b;c,cp;x,y] beyond the defining double series:
//
//  - psi1_laplace: the real-axis integral representation
//        Psi1 = (1/Gamma(a)) int_0^inf e^{-u} u^{a-1} 1F1[b;c;xu] 0F1[;cp;yu] du,
//    convergent for Re a > 0 and Re x < 1, any y.
//  - psi1_outer_series: the convergent expansion in powers of 1/(1-x), valid
//    for |x-1| > 1 and any y.  Two companion series, one with inner 2F2
//    values at argument y/(1-x), one at argument y itself.
//  - psi1_kummer: the first-argument reflection onto x/(x-1), mapping the
//    half-plane Re x < 1/2 into the unit disc.
//  - psi1_eval: route dispatcher combining all of the above with the series.
//
// Every route computes internally in 80-bit arithmetic whatever the interface
// precision, since the inner kernels cancel by factors up to e^{|y|}.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "humbert/confluent.hpp"
#include "humbert/f2f2_asym.hpp"
#include "humbert/params.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/series.hpp"

namespace humbert {
namespace detail {

// Roundoff amplification of a direct Taylor sum at argument w: the largest
// term is about e^{|w|} while the sum is only about e^{max(Re w, 0)}, so
// machine epsilon scales up by the ratio.  Capped so it never overflows; a
// cap that large means "unusable" anyway.
inline long double taylor_loss(const cld& w) {
  const long double e = std::abs(w) - std::max(w.real(), 0.0L);
  return precision_traits<long double>::eps * std::exp(std::min(e, 300.0L));
}

struct Inner2F2 {
  cld value{};
  long double err = 0;  // absolute
  long terms = 0;
  bool degraded = false;
};

// 2F2[A, Bb - n; C, Db - n; w] for one term of the outer expansion.  Two
// routes: the direct Taylor sum in 80-bit precision, and the large-argument
// expansion at z = -w.  In the crossover strip (cancellation already biting
// but |w| still moderate, roughly 12..45) both run and the one with the
// smaller error estimate wins; past the strip the direct sum has no digits
// left and the expansion stands alone.  The expansion requires A - Bb and
// Db away from integers; when it is unavailable (or its pole-lattice
// exclusion zone is hit) the direct sum is all there is, and the result is
// flagged as degraded whenever the best error misses the requested band.
inline Inner2F2 inner_2f2(const cld& A, const cld& Bb, const cld& C,
                          const cld& Db, long n, const cld& w,
                          const TruncationPolicy& policy) {
  const long double band = 100.0L * (long double)policy.rel_tol;
  const long double loss = taylor_loss(w);
  const bool want_expansion = loss > 0.05L * (long double)policy.rel_tol;
  const bool expansion_usable = std::abs(w) >= 12.0L && !is_int(A - Bb) &&
                                !is_int(Db) && !is_nonpos_int(C);

  Inner2F2 expv;
  bool have_exp = false;
  if (want_expansion && expansion_usable) {
    const TwoF2Family<long double> fam{A, Bb, C, Db, n};
    const cld z = -w;
    const double az = static_cast<double>(std::abs(z));
    const double mx = std::max({static_cast<double>(A.real()),
                                static_cast<double>(Bb.real()),
                                static_cast<double>(Db.real())});
    double target = std::log(1.0 / policy.rel_tol) / std::log(az) + 2.0;
    target = std::min(target, 30.0);
    target = std::max(target, mx + 1.0);
    try {
      const WSelection sel = choose_w(fam, target, 0.1);
      const auto r = f2f2_large_z(fam, z, sel, 10);
      expv.value = r.value;
      expv.err = r.err_estimate;
      expv.terms = r.terms_used;
      have_exp = true;
    } catch (const exclusion_error&) {
      // z landed in the pole-lattice exclusion strip; direct sum below
    } catch (const pole_error&) {
      // a numerator gamma grazed a pole for this particular shift
    } catch (const convergence_error&) {
      // no admissible truncation order
    }
  }
  if (have_exp && std::abs(w) > 45.0L) {
    expv.degraded =
        expv.err > band * std::max(std::abs(expv.value), 1e-300L);
    return expv;
  }

  TruncationPolicy tight;
  tight.rel_tol = 1e-17;
  tight.max_terms = std::max(policy.max_terms, long(100000));
  const HypParams<long double> par{{A, Bb - cld((long double)n)},
                                   {C, Db - cld((long double)n)}};
  const auto r = pfq<long double>(par, w, tight);
  Inner2F2 direct;
  direct.value = r.value;
  direct.err = std::abs(r.value) * loss + r.err_estimate;
  direct.terms = r.terms_used;

  Inner2F2 out = (have_exp && expv.err < direct.err) ? expv : direct;
  out.terms = direct.terms + expv.terms;
  out.degraded = out.err > band * std::max({std::abs(direct.value),
                                            std::abs(expv.value), 1e-300L});
  return out;
}

}  // namespace detail

// Integral-representation evaluation.  The quadrature splits at u = 1: a
// double-exponential rule on [0,1] absorbs the u^{a-1} endpoint singularity,
// then adaptive panels cover [1,U] with segment seeds at the oscillation
// nodes of the 0F1 factor when y points near the negative real axis.  U is
// set from the integrand's decay rate so the analytic tail bound falls below
// tolerance; that bound is folded into err_estimate rather than dropped.
template <class Real>
ApproxResult<Real> psi1_laplace(const Psi1Params<Real>& params,
                                const EvalPoint<Real>& pt,
                                const TruncationPolicy& policy) {
  params.validate();
  policy.validate();
  if (!params.laplace_ok())
    throw domain_error("psi1_laplace: requires Re a > 0");
  if (!(pt.x.real() < Real(1)))
    throw domain_error(
        "psi1_laplace: integral diverges unless Re x < 1");

  using detail::cld;
  const cld A((long double)params.a.real(), (long double)params.a.imag());
  const cld B((long double)params.b.real(), (long double)params.b.imag());
  const cld C((long double)params.c.real(), (long double)params.c.imag());
  const cld CP((long double)params.cp.real(), (long double)params.cp.imag());
  const cld X((long double)pt.x.real(), (long double)pt.x.imag());
  const cld Y((long double)pt.y.real(), (long double)pt.y.imag());

  // decay exponent of the integrand is -(1-r)u + 2R sqrt(u) + algebraic
  const long double r = std::max(X.real(), 0.0L);
  const long double R = std::max(std::sqrt(Y).real(), 0.0L);
  const long double L = std::log(1.0L / (long double)policy.rel_tol) + 60.0L;
  const long double sU = (R + std::sqrt(R * R + (1 - r) * L)) / (1 - r);
  const long double U = std::max(sU * sU, 30.0L);

  // the 1F1 and 0F1 factors overflow 80-bit range on their own (even though
  // the damped product would not) once these exponents pass ~1.1e4
  if (std::max(r * U, 2 * std::sqrt(std::abs(Y) * U)) > 10500.0L)
    throw convergence_error(
        "psi1_laplace: integrand factors overflow extended precision for "
        "these magnitudes of x and y");

  auto g = [&](long double u) -> cld {
    const cld uu(u);
    return std::exp(-u) * cpow(uu, A - cld(1)) * detail::f11(B, C, X * uu) *
           detail::f01(CP, Y * uu);
  };

  // order-of-magnitude peak, to turn rel_tol into an absolute panel budget
  auto logmag = [&](long double u) {
    return -(1 - r) * u + 2 * R * std::sqrt(u) +
           (A.real() - 1) * std::log(std::max(u, 1.0L));
  };
  const long double upeak =
      std::clamp(R * R / ((1 - r) * (1 - r)), 1.0L, U);
  const long double lnM =
      std::max({logmag(upeak), logmag(1.0L), logmag(U)});
  const long double M = std::exp(std::min(lnM, 11000.0L));
  const long double abs_tol = (long double)policy.rel_tol * M / 4;

  ApproxResult<Real> res;
  res.method = "laplace";

  const auto head = detail::tanh_sinh_01<long double>(
      [&](long double t, long double) { return g(t); },
      abs_tol / std::max(U, 2.0L));

  // segment seeds: oscillation nodes of the 0F1 factor sit near
  // u_k = (k pi)^2 / (4 |y|) once sqrt(y u) is close to imaginary
  std::vector<long double> seeds{1.0L};
  const long double ay = std::abs(Y);
  if (ay > 0 && R * R < ay / 4) {
    const long double kmax =
        std::floor(2 * std::sqrt(ay * U) / detail::pi_ld);
    const long kstep = (long)kmax / 4000 + 1;
    for (long k = kstep; (long double)k <= kmax; k += kstep) {
      const long double uk =
          (k * detail::pi_ld) * (k * detail::pi_ld) / (4 * ay);
      if (uk > 1.0L && uk < U) seeds.push_back(uk);
    }
  }
  seeds.push_back(U);

  cld body(0);
  long double body_err = 0;
  long evals = head.evals;
  bool converged = head.converged;
  for (std::size_t i = 0; i + 1 < seeds.size(); ++i) {
    const auto seg = detail::adaptive_gl<long double>(
        g, seeds[i], seeds[i + 1], abs_tol * (seeds[i + 1] - seeds[i]) / U);
    body += seg.value;
    body_err += seg.err_estimate;
    evals += seg.evals;
    converged = converged && seg.converged;
  }

  const long double tail =
      std::exp(std::min(logmag(U), 11000.0L)) * 2 / (1 - r);
  const cld rg = safe_exp(-log_gamma(A));  // 1/Gamma(a), a off the poles here
  const cld total = (head.value + body) * rg;

  res.value = cplx<Real>((Real)total.real(), (Real)total.imag());
  res.err_estimate =
      (Real)((head.err_estimate + body_err + tail) * std::abs(rg) +
             std::abs(total) * precision_traits<long double>::eps * 16);
  res.terms_used = evals;
  res.converged = converged;
  if (!converged)
    res.warnings.push_back("quadrature hit its refinement depth limit");
  return res;
}

// Convergent expansion in powers of 1/(1-x) for |x-1| > 1.  Hypotheses: a-b
// and a-c off the integers (the two gamma prefactors and the shifted inner
// parameters all stay off the poles exactly when these hold).  Convergence
// degrades as |x-1| -> 1, so a warning fires below 1.2.
template <class Real>
ApproxResult<Real> psi1_outer_series(const Psi1Params<Real>& params,
                                     const EvalPoint<Real>& pt,
                                     const TruncationPolicy& policy) {
  params.validate();
  policy.validate();
  if (!params.outer_series_ok())
    throw domain_error(
        "psi1_outer_series: requires a-b and a-c away from the integers");

  using detail::cld;
  const cld ONE(1);
  const cld a((long double)params.a.real(), (long double)params.a.imag());
  const cld b((long double)params.b.real(), (long double)params.b.imag());
  const cld c((long double)params.c.real(), (long double)params.c.imag());
  const cld cp((long double)params.cp.real(), (long double)params.cp.imag());
  const cld X((long double)pt.x.real(), (long double)pt.x.imag());
  const cld Y((long double)pt.y.real(), (long double)pt.y.imag());
  const cld OMX = ONE - X;
  const long double aomx = std::abs(OMX);
  if (!(aomx > 1.0L))
    throw domain_error("psi1_outer_series: requires |x-1| > 1");

  ApproxResult<Real> res;
  res.method = "outer_series";
  if (aomx < 1.2L)
    res.warnings.push_back("slow convergence: |x-1| barely above 1");

  const cld w1 = Y / OMX;
  const cld A1 = a - c + ONE;   // shared upper parameter of both inner 2F2s
  const cld ab1 = a - b + ONE;  // lower-shift base of the first series

  const cld P1 = gamma_ratio<long double>({c, b - a}, {b, c - a}) *
                 cpow(OMX, -a);
  const cld P2 = gamma_ratio<long double>({c, a - b}, {a, c - b}) *
                 cpow(OMX, -b);

  cld v1(0), v2(0);
  cld coef1(1), coef2(1);  // pochhammer products over (1-x)^n n!
  long double inc1 = 0, inc2 = 0, inner_err = 0;
  long terms = 0;
  int streak = 0;
  bool degraded = false;

  for (long n = 0; n < policy.max_terms; ++n) {
    const cld nn((long double)n);
    const auto i1 =
        detail::inner_2f2(A1, a + nn, cp, ab1 + nn, 0, w1, policy);
    const auto i2 = detail::inner_2f2(A1, a - b, cp, A1, n, Y, policy);
    degraded = degraded || i1.degraded || i2.degraded;

    const cld t1 = coef1 * i1.value;
    const cld t2 = coef2 * i2.value;
    v1 += t1;
    v2 += t2;
    inner_err += std::abs(coef1) * std::abs(P1) * i1.err +
                 std::abs(coef2) * std::abs(P2) * i2.err;
    terms += i1.terms + i2.terms;

    inc1 = std::abs(P1) * std::abs(t1);
    inc2 = std::abs(P2) * std::abs(t2);
    const long double scale =
        std::max(std::abs(P1 * v1 + P2 * v2), (long double)1e-300);
    if (n >= 2 && inc1 + inc2 <= (long double)policy.rel_tol * scale) {
      if (++streak >= policy.stagnation_window) break;
    } else {
      streak = 0;
    }

    coef1 *= (a + nn) * (c - b + nn) / ((ab1 + nn) * (nn + ONE)) / OMX;
    coef2 *= (b + nn) * (c - a + nn) / ((b - a + ONE + nn) * (nn + ONE)) / OMX;
  }
  if (streak < policy.stagnation_window)
    throw convergence_error(
        "psi1_outer_series: max_terms reached without convergence");

  const cld total = P1 * v1 + P2 * v2;
  // geometric tail in 1/|1-x| on top of the accumulated inner-route errors
  const long double q = 1 / aomx;
  const long double tail = (inc1 + inc2) * q / (1 - q);
  res.value = cplx<Real>((Real)total.real(), (Real)total.imag());
  res.err_estimate =
      (Real)(tail + inner_err +
             std::abs(total) * precision_traits<long double>::eps * 8);
  res.terms_used = terms;
  res.converged = true;
  if (degraded)
    res.warnings.push_back(
        "inner series accuracy limited in this y range; err_estimate "
        "reflects the achieved bound");
  return res;
}

// First-argument reflection
//   Psi1[a,b;c,cp;x,y] = (1-x)^{-a} Psi1[a,c-b;c,cp; x/(x-1), y/(1-x)],
// an involution.  The image point carries the kummer_image region tag.
template <class Real>
struct KummerImage {
  Psi1Params<Real> params;
  EvalPoint<Real> point;
  cplx<Real> prefactor;
};

template <class Real>
KummerImage<Real> psi1_kummer(const Psi1Params<Real>& params,
                              const EvalPoint<Real>& pt) {
  params.validate();
  if (!in_psi1_domain(pt.x))
    throw domain_error("psi1_kummer: x on the branch cut [1, inf)");
  const cplx<Real> omx = cplx<Real>(1) - pt.x;
  KummerImage<Real> img{
      Psi1Params<Real>{params.a, params.c - params.b, params.c, params.cp},
      make_point(pt.x / (pt.x - cplx<Real>(1)), pt.y / omx),
      cpow(omx, -params.a)};
  img.point.region = Region::kummer_image;
  return img;
}

// Route picker.  In order: the defining double series well inside the unit
// disc, the 1/(1-x) expansion well outside the |x-1| = 1 circle, the same
// two zones for the reflected point (one reflection only: the map is an
// involution, so chaining it just returns to the start), and the integral
// representation as the fallback for the annulus between the safety radii.
template <class Real>
ApproxResult<Real> psi1_eval(const Psi1Params<Real>& params,
                             const EvalPoint<Real>& pt,
                             const TruncationPolicy& policy,
                             Real disc_radius = Real(0.95),
                             Real outer_radius = Real(1.2)) {
  params.validate();
  policy.validate();
  if (!in_psi1_domain(pt.x))
    throw domain_error("psi1_eval: x on the branch cut [1, inf)");

  if (std::abs(pt.x) <= disc_radius) {
    auto r = psi1_double_series(params, pt.x, pt.y, policy);
    r.method = "double_series";
    return r;
  }
  if (std::abs(pt.x - cplx<Real>(1)) >= outer_radius &&
      params.outer_series_ok())
    return psi1_outer_series(params, pt, policy);

  const auto img = psi1_kummer(params, pt);
  auto finish = [&](ApproxResult<Real> r, const char* tag) {
    r.value *= img.prefactor;
    r.err_estimate *= std::abs(img.prefactor);
    r.method = tag;
    return r;
  };
  if (std::abs(img.point.x) <= disc_radius)
    return finish(
        psi1_double_series(img.params, img.point.x, img.point.y, policy),
        "kummer+double_series");
  if (std::abs(img.point.x - cplx<Real>(1)) >= outer_radius &&
      img.params.outer_series_ok())
    return finish(psi1_outer_series(img.params, img.point, policy),
                  "kummer+outer_series");

  if (params.laplace_ok() && pt.x.real() < Real(1)) {
    try {
      return psi1_laplace(params, pt, policy);
    } catch (const convergence_error&) {
      // the direct integrand overflows near Re x -> 1^-, where the
      // reflected one is still tame; rethrow only if that exit is shut too
      if (!(img.params.laplace_ok() && img.point.x.real() < Real(1))) throw;
    }
  }
  if (img.params.laplace_ok() && img.point.x.real() < Real(1))
    return finish(psi1_laplace(img.params, img.point, policy),
                  "kummer+laplace");

  std::string why =
      "psi1_eval: no admissible route; x and its reflection both sit in the "
      "annulus between the series regions";
  if (!params.outer_series_ok())
    why += "; a-b or a-c is an integer, excluding the 1/(1-x) expansion";
  if (!params.laplace_ok())
    why += "; Re a <= 0, excluding the integral representation";
  throw domain_error(why);
}

}  // namespace humbert

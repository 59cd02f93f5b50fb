// Large-argument machinery for 2F2[a, b-n; c, d-n; .]: the two algebraic
// sums S_n, T_n, the exponential companion series with coefficients c_{k,n},
// the truncation-order selector, and a growth-bound predicate for the
// parameter family shifted by +n.
#pragma once

#include <algorithm>
#include <string>

#include "humbert/series.hpp"

namespace humbert {

template <class Real>
struct TwoF2Family {
  cplx<Real> a, b, c, d;
  long n = 0;  // shift index: parameters b-n, d-n

  void validate() const {
    if (n < 0) throw domain_error("TwoF2Family: shift index must be >= 0");
    if (is_nonpos_int(c))
      throw pole_error("TwoF2Family: c at a non-positive integer");
    if (is_int(d))
      throw domain_error("TwoF2Family: d must stay away from integers");
    if (is_int(a - b))
      throw domain_error("TwoF2Family: a - b must stay away from integers");
  }
};

// truncation order w plus the margin eps its fractional parts were tested
// against; floor_a and floor_b are the algebraic upper limits
struct WSelection {
  double w = 0;
  double eps = 0;
  long floor_a = 0;
  long floor_b = 0;
};

// Smallest w >= target_order whose distances to Re(a) and Re(b) have
// fractional parts in (eps, 1), scanning upward in steps of eps/2. If no w
// inside [target, target+1) passes, the margin is halved (floor 1e-3) and
// the scan restarts; a widened margin is visible as sel.eps < requested.
template <class Real>
WSelection choose_w(const TwoF2Family<Real>& fam, double target_order,
                    double eps) {
  fam.validate();
  if (!(eps > 0 && eps < 0.5))
    throw domain_error("choose_w: eps must lie in (0, 1/2)");
  const double ra = static_cast<double>(fam.a.real());
  const double rb = static_cast<double>(fam.b.real());
  const double rd = static_cast<double>(fam.d.real());
  if (!(target_order > std::max({ra, rb, rd})))
    throw domain_error("choose_w: target_order must exceed max Re{a, b, d}");

  // states the open interval (e, 1) with slack so that grid points landing
  // exactly on a boundary are rejected despite rounding drift; a margin held
  // by one ulp is no margin at all
  auto frac_ok = [](double v, double e) {
    double f = v - std::floor(v);
    return f > e + 1e-12 && f < 1.0 - 1e-12;
  };
  for (double e = eps;; e /= 2) {
    const bool last = e <= 1e-3;
    if (last) e = 1e-3;
    const double step = e / 2;
    for (long i = 0; i * step < 1.0; ++i) {
      const double w = target_order + static_cast<double>(i) * step;
      if (frac_ok(w - ra, e) && frac_ok(w - rb, e))
        return WSelection{w, e, static_cast<long>(std::floor(w - ra)),
                          static_cast<long>(std::floor(w - rb))};
    }
    if (last)
      throw convergence_error("choose_w: no admissible truncation order");
  }
}

namespace detail {

// Numerator gammas near a pole mean the parameter hypotheses (integer
// differences excluded) are violated; a silently huge term would poison any
// cross-validation, so refuse. Denominator gammas at poles are legitimate:
// they null the term (the d = a family collapses its whole S part this way).
template <class Real>
void guard_numerator(const cplx<Real>& u, const char* what) {
  if (dist_to_nonpos_int(u) < Real(1e-6))
    throw pole_error(std::string("2F2 expansion: gamma argument ") + what +
                     " within 1e-6 of a non-positive integer");
}

template <class Real>
struct TailSum {
  cplx<Real> sum{};
  Real next_abs{};  // magnitude of the first omitted term
};

// shared kernel for the algebraic sums: terms
//   Gamma(num1(k)) Gamma(num2(k)) / (Gamma(den1(k)) Gamma(den2(k)))
//   * (-1)^k z^{pw(k)} / k!
template <class Real, class P1, class P2, class P3, class P4, class PW>
TailSum<Real> alg_sum(const cplx<Real>& z, long kmax, P1 num1, P2 num2,
                      P3 den1, P4 den2, PW pw) {
  const cplx<Real> lz = std::log(z);
  TailSum<Real> out;
  Real lfact = 0;
  for (long k = 0; k <= kmax + 1; ++k) {
    if (k > 0) lfact += std::log(static_cast<Real>(k));
    const cplx<Real> n1 = num1(k), n2 = num2(k);
    guard_numerator(n1, "numerator 1");
    guard_numerator(n2, "numerator 2");
    const cplx<Real> d1 = den1(k), d2 = den2(k);
    cplx<Real> term(0);
    if (!is_nonpos_int(d1) && !is_nonpos_int(d2)) {
      term = safe_exp(log_gamma(n1) + log_gamma(n2) - log_gamma(d1) -
                      log_gamma(d2) + pw(k) * lz - lfact);
      if (k & 1) term = -term;
    }
    if (k <= kmax)
      out.sum += term;
    else
      out.next_abs = std::abs(term);
  }
  return out;
}

template <class Real>
TailSum<Real> s_n_tail(const TwoF2Family<Real>& fam, const cplx<Real>& z,
                       long kmax) {
  const Real n = static_cast<Real>(fam.n);
  return alg_sum(
      z, kmax, [&](long k) { return fam.a + static_cast<Real>(k); },
      [&](long k) { return fam.b - fam.a - n - static_cast<Real>(k); },
      [&](long k) { return fam.c - fam.a - static_cast<Real>(k); },
      [&](long k) { return fam.d - fam.a - n - static_cast<Real>(k); },
      [&](long k) { return -fam.a - static_cast<Real>(k); });
}

template <class Real>
TailSum<Real> t_n_tail(const TwoF2Family<Real>& fam, const cplx<Real>& z,
                       long kmax) {
  const Real n = static_cast<Real>(fam.n);
  return alg_sum(
      z, kmax, [&](long k) { return fam.b - n + static_cast<Real>(k); },
      [&](long k) { return fam.a - fam.b + n - static_cast<Real>(k); },
      [&](long k) { return fam.d - fam.b - static_cast<Real>(k); },
      [&](long k) { return fam.c - fam.b + n - static_cast<Real>(k); },
      [&](long k) { return n - fam.b - static_cast<Real>(k); });
}

template <class Real>
void check_z_preconditions(const cplx<Real>& z) {
  if (z == cplx<Real>(0))
    throw domain_error("2F2 expansion: z must be nonzero");
  if (z.imag() == Real(0) && z.real() < Real(0))
    throw domain_error("2F2 expansion: requires |arg z| < pi");
}

}  // namespace detail

// algebraic sum S_n(z), exact finite sum with log-space gamma products
template <class Real>
cplx<Real> s_n_sum(const TwoF2Family<Real>& fam, const cplx<Real>& z,
                   const WSelection& sel) {
  fam.validate();
  detail::check_z_preconditions(z);
  return detail::s_n_tail(fam, z, sel.floor_a).sum;
}

// algebraic sum T_n(z); upper limit grows by one per unit shift n
template <class Real>
cplx<Real> t_n_sum(const TwoF2Family<Real>& fam, const cplx<Real>& z,
                   const WSelection& sel) {
  fam.validate();
  detail::check_z_preconditions(z);
  return detail::t_n_tail(fam, z, sel.floor_b + fam.n).sum;
}

// coefficient of the exponential companion series,
//   c_{k,n} = [(c+d-a-b)_k (n+1-b)_k / k!] 3F2[-k, c-a, d-a-n;
//                                             c+d-a-b, b-n-k; 1]
template <class Real>
cplx<Real> coeff_c_kn(const cplx<Real>& a, const cplx<Real>& b,
                      const cplx<Real>& c, const cplx<Real>& d, long k,
                      long n) {
  if (k < 0 || n < 0)
    throw domain_error("coeff_c_kn: indices must be non-negative");
  const cplx<Real> s = c + d - a - b;
  const cplx<Real> rk(static_cast<Real>(k)), rn(static_cast<Real>(n));
  cplx<Real> f32 = f3f2_unity_terminating<Real>(
      {{-rk, c - a, d - a - rn}, {s, b - rn - rk}});
  cplx<Real> lead = pochhammer(s, k) * pochhammer(cplx<Real>(1) + rn - b, k);
  Real lfact = std::lgamma(static_cast<Real>(k + 1));
  return lead * std::exp(-lfact) * f32;
}

// Compound large-argument evaluation of 2F2[a, b-n; c, d-n; -z]: prefactored
// algebraic sums S_n + T_n plus the exponential companion series in the
// variable y = -z with n_exp_terms terms. On the positive real axis of the
// argument (z real negative) only the exponential part is meaningful and the
// algebraic part is skipped. err_estimate adds the first omitted term of
// each part.
template <class Real>
ApproxResult<Real> f2f2_large_z(const TwoF2Family<Real>& fam,
                                const cplx<Real>& z, const WSelection& sel,
                                long n_exp_terms) {
  fam.validate();
  if (n_exp_terms < 1)
    throw domain_error("f2f2_large_z: need at least one exponential term");
  if (z == cplx<Real>(0))
    throw domain_error("f2f2_large_z: z must be nonzero");

  const bool arg_pos_axis = z.imag() == Real(0) && z.real() < Real(0);
  const Real nr = static_cast<Real>(fam.n);
  const cplx<Real> pref =
      gamma_ratio<Real>({fam.c, fam.d - nr}, {fam.a, fam.b - nr});

  ApproxResult<Real> res;
  res.method = "f2f2_large_z";

  if (!arg_pos_axis) {
    // z away from the shifted pole lattice -b + Z (theorem exclusion zone)
    const cplx<Real> zb = z + fam.b;
    const long k0 = std::lround(static_cast<double>(zb.real()));
    if (std::abs(zb - cplx<Real>(static_cast<Real>(k0))) < Real(0.125))
      throw exclusion_error(
          "f2f2_large_z: z within 1/8 of the lattice -b + Z");

    auto S = detail::s_n_tail(fam, z, sel.floor_a);
    auto T = detail::t_n_tail(fam, z, sel.floor_b + fam.n);
    res.value += pref * (S.sum + T.sum);
    res.err_estimate += std::abs(pref) * (S.next_abs + T.next_abs);
    res.terms_used += (sel.floor_a + 1) + (sel.floor_b + fam.n + 1);
  }

  // exponential part, always carried: dominant for Re y > 0, exponentially
  // small otherwise but still sharpening the compound result
  const cplx<Real> y = -z;
  const cplx<Real> expfac = pref * safe_exp(y);
  if (expfac != cplx<Real>(0)) {
    const cplx<Real> psum = fam.a + fam.b - fam.c - fam.d;  // n-independent
    cplx<Real> esum(0);
    for (long k = 0; k < n_exp_terms; ++k)
      esum += coeff_c_kn(fam.a, fam.b, fam.c, fam.d, k, fam.n) *
              cpow(y, psum - cplx<Real>(static_cast<Real>(k)));
    res.value += expfac * esum;
    res.err_estimate +=
        std::abs(expfac *
                 coeff_c_kn(fam.a, fam.b, fam.c, fam.d, n_exp_terms, fam.n) *
                 cpow(y, psum - cplx<Real>(static_cast<Real>(n_exp_terms))));
    res.terms_used += n_exp_terms;
  }
  res.converged = true;
  return res;
}

// Growth-bound check for the +n family: |2F2[a, b+n; c, d+n; z]| against
// scale * (n+1)^{2|b-d|} z^p e^z with p = Re(a-c) + max{0, Re(b-d)}, the
// left side summed directly in extended precision. z real positive.
template <class Real>
BoundReport<Real> f2f2_growth_check_plus_n(const TwoF2Family<Real>& fam,
                                           const cplx<Real>& z, long n,
                                           Real scale = Real(1)) {
  fam.validate();
  if (n < 0) throw domain_error("f2f2_growth_check_plus_n: n must be >= 0");
  if (!(z.imag() == Real(0) && z.real() > Real(0)))
    throw domain_error("f2f2_growth_check_plus_n: z must be real positive");

  using LD = long double;
  const cplx<LD> a(fam.a.real(), fam.a.imag()), b(fam.b.real(), fam.b.imag()),
      c(fam.c.real(), fam.c.imag()), d(fam.d.real(), fam.d.imag());
  const cplx<LD> nn(static_cast<LD>(n));
  TruncationPolicy pol;
  pol.rel_tol = 1e-16;
  auto direct =
      pfq<LD>({{a, b + nn}, {c, d + nn}}, cplx<LD>(z.real()), pol);

  const Real p = (fam.a - fam.c).real() +
                 std::max(Real(0), (fam.b - fam.d).real());
  const Real nexp = 2 * std::abs(fam.b - fam.d);
  const Real lhs = static_cast<Real>(std::abs(direct.value));
  const Real rhs = scale *
                   std::pow(static_cast<Real>(n + 1), nexp) *
                   std::pow(z.real(), p) * std::exp(z.real());
  return make_bound_report(lhs, rhs);
}

}  // namespace humbert

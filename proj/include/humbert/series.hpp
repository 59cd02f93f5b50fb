// Direct summation engines: generalized hypergeometric pFq with running-term
// recurrence and stagnation-window truncation, exact terminating sums at
// unity, and the defining double series of Psi1.
#pragma once

#include <optional>
#include <vector>

#include "humbert/gamma.hpp"
#include "humbert/params.hpp"

namespace humbert {

template <class Real>
struct HypParams {
  std::vector<cplx<Real>> upper;
  std::vector<cplx<Real>> lower;
};

namespace detail {

// index of the smallest-magnitude non-positive-integer upper parameter,
// i.e. the number of the last nonzero term of a terminating series
template <class Real>
std::optional<long> terminating_index(const HypParams<Real>& par) {
  std::optional<long> jmin;
  for (const auto& u : par.upper) {
    if (is_nonpos_int(u)) {
      long j = std::lround(static_cast<double>(-u.real()));
      if (!jmin || j < *jmin) jmin = j;
    }
  }
  return jmin;
}

// a lower parameter at a non-positive integer is only allowed when the
// series terminates before reaching its pole
template <class Real>
void check_lower_poles(const HypParams<Real>& par,
                       const std::optional<long>& jterm) {
  for (const auto& l : par.lower) {
    if (is_nonpos_int(l)) {
      long pole_at = std::lround(static_cast<double>(-l.real())) + 1;
      if (!jterm || *jterm >= pole_at)
        throw pole_error(
            "hypergeometric series: lower parameter pole reached before "
            "termination");
    }
  }
}

}  // namespace detail

template <class Real>
ApproxResult<Real> pfq(const HypParams<Real>& par, const cplx<Real>& z,
                       const TruncationPolicy& policy) {
  policy.validate();
  const auto jterm = detail::terminating_index(par);
  detail::check_lower_poles(par, jterm);

  const std::size_t p = par.upper.size(), q = par.lower.size();
  if (!jterm) {
    if (p == q + 1 && std::abs(z) >= Real(1))
      throw domain_error("pfq: divergent series (p = q+1 with |z| >= 1)");
    if (p > q + 1 && z != cplx<Real>(0))
      throw domain_error("pfq: divergent series (p > q+1)");
  }

  const Real huge = std::numeric_limits<Real>::max() / 16;
  const Real rel_tol = Real(policy.rel_tol);

  ApproxResult<Real> res;
  res.method = "pfq";
  cplx<Real> term(1), sum(0);
  Real max_abs = 0, window_abs = 0;
  int streak = 0;
  long k = 0;
  for (; k < policy.max_terms; ++k) {
    sum += term;
    Real at = std::abs(term);
    max_abs = std::max(max_abs, at);
    if (at > huge || std::abs(sum) > huge)
      throw overflow_error("pfq: term magnitude exceeds this precision");

    if (jterm && k == *jterm) {  // exact termination: later terms vanish
      res.value = sum;
      res.terms_used = k + 1;
      res.converged = true;
      res.err_estimate = precision_traits<Real>::eps * max_abs *
                         Real(res.terms_used);
      return res;
    }

    if (at < rel_tol * std::abs(sum)) {
      ++streak;
      window_abs += at;
      if (streak >= policy.stagnation_window) {
        res.value = sum;
        res.terms_used = k + 1;
        res.converged = true;
        res.err_estimate =
            std::max(Real(2) * window_abs,
                     precision_traits<Real>::eps * max_abs *
                         Real(res.terms_used));
        return res;
      }
    } else {
      streak = 0;
      window_abs = 0;
    }

    cplx<Real> ratio(1);
    for (const auto& u : par.upper) ratio *= u + Real(k);
    for (const auto& l : par.lower) {
      cplx<Real> den = l + Real(k);
      if (std::abs(den) < Real(1e-12) * (Real(1) + std::abs(l)))
        throw pole_error(
            "pfq: lower parameter pole reached before termination");
      ratio /= den;
    }
    term *= ratio * z / Real(k + 1);
  }
  throw convergence_error("pfq: max_terms reached without convergence");
}

// Exact finite sum of a terminating series at unit argument (the 3F2-at-1
// factors inside the expansion coefficients). Works for any arity; requires
// a non-positive-integer upper parameter.
template <class Real>
cplx<Real> f3f2_unity_terminating(const HypParams<Real>& par) {
  const auto jterm = detail::terminating_index(par);
  if (!jterm)
    throw domain_error(
        "f3f2_unity_terminating: no non-positive-integer upper parameter");
  cplx<Real> term(1), sum(0);
  for (long k = 0;; ++k) {
    sum += term;
    if (k == *jterm) return sum;
    cplx<Real> ratio(1);
    for (const auto& u : par.upper) ratio *= u + Real(k);
    for (const auto& l : par.lower) {
      cplx<Real> den = l + Real(k);
      if (std::abs(den) < Real(1e-9))
        throw pole_error(
            "f3f2_unity_terminating: lower parameter pole before "
            "termination");
      ratio /= den;
    }
    term *= ratio / Real(k + 1);
  }
}

// The defining double series of Psi1, valid for |x| < 1. Row decomposition:
// sum over n of  (a)_n y^n / ((cp)_n n!) * 2F1[a+n, b; c; x],
// inner sum by running recurrence with a geometric tail majorant, outer sum
// under the stagnation rule. When |x-1| > 1 the inner Gauss series is summed
// through the reflection 2F1[A, b; c; x] = (1-x)^{-b} 2F1[c-A, b; c; x/(x-1)]:
// the reflected argument has smaller modulus there, which caps the max-term
// bulge that the growing upper parameter a+n otherwise produces near |x| = 1.
template <class Real>
ApproxResult<Real> psi1_double_series(const Psi1Params<Real>& params,
                                      const cplx<Real>& x, const cplx<Real>& y,
                                      const TruncationPolicy& policy) {
  params.validate();
  policy.validate();
  if (std::abs(x) >= Real(1))
    throw domain_error("psi1_double_series: defining region requires |x| < 1");

  const bool reflect = std::abs(x - cplx<Real>(1)) > Real(1);
  const cplx<Real> xe = reflect ? x / (x - cplx<Real>(1)) : x;
  const cplx<Real> row_pref =
      reflect ? cpow(cplx<Real>(1) - x, -params.b) : cplx<Real>(1);

  const Real huge = std::numeric_limits<Real>::max() / 16;
  const Real rel_tol = Real(policy.rel_tol);
  // Rows can grow orders of magnitude past the final sum before cancelling
  // (alternating y), so each row is summed to machine accuracy regardless of
  // the policy tolerance; the policy governs the outer truncation only.
  const Real itol = precision_traits<Real>::eps / 4;
  const Real qx = (std::abs(xe) + Real(1)) / 2;  // inner tail ratio, margin

  ApproxResult<Real> res;
  res.method = "double_series";

  cplx<Real> sum(0);
  cplx<Real> outer_coef(1);  // (a)_n y^n / ((cp)_n n!)
  Real max_row = 0, window_abs = 0, inner_tails = 0;
  int streak = 0;
  long total_terms = 0;

  for (long n = 0; n < policy.max_terms; ++n) {
    // inner 2F1[upper1, b; c; xe] by term recurrence
    const cplx<Real> upper1 =
        reflect ? params.c - params.a - Real(n) : params.a + Real(n);
    cplx<Real> it(1), isum(0);
    long m = 0;
    for (; m < policy.max_terms; ++m) {
      isum += it;
      Real ait = std::abs(it);
      if (ait > huge) throw overflow_error("psi1_double_series: overflow");
      if (m >= 4 && ait <= itol * std::max(std::abs(isum), Real(1e-30)))
        break;
      cplx<Real> den = (params.c + Real(m)) * Real(m + 1);
      if (std::abs(den) == Real(0))
        throw pole_error("psi1_double_series: (c)_m pole");
      it *= (upper1 + Real(m)) * (params.b + Real(m)) / den * xe;
    }
    if (m >= policy.max_terms)
      throw convergence_error("psi1_double_series: inner sum stalled");
    total_terms += m + 1;
    inner_tails += std::abs(outer_coef * row_pref) * std::abs(it) * qx /
                   (Real(1) - qx);

    cplx<Real> row = outer_coef * row_pref * isum;
    sum += row;
    Real arow = std::abs(row);
    max_row = std::max(max_row, arow);
    if (arow > huge || std::abs(sum) > huge)
      throw overflow_error("psi1_double_series: overflow");

    if (arow < rel_tol * std::abs(sum)) {
      ++streak;
      window_abs += arow;
      if (streak >= policy.stagnation_window) {
        res.value = sum;
        res.terms_used = total_terms;
        res.converged = true;
        res.err_estimate =
            std::max(Real(2) * window_abs,
                     precision_traits<Real>::eps * max_row * Real(n + 1)) +
            inner_tails;
        return res;
      }
    } else {
      streak = 0;
      window_abs = 0;
    }

    cplx<Real> dn = (params.cp + Real(n)) * Real(n + 1);
    if (std::abs(dn) == Real(0))
      throw pole_error("psi1_double_series: (cp)_n pole");
    outer_coef *= (params.a + Real(n)) / dn * y;
  }
  throw convergence_error(
      "psi1_double_series: max_terms reached without convergence");
}

}  // namespace humbert

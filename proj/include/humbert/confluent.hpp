// Confluent kernels 1F1[b;c;w] and 0F1[;cp;s] for the integral representation
// of Psi1. Always evaluated in 80-bit precision internally: the integrand is
// sampled at arguments spanning many orders of magnitude, and the compound
// large-argument expansions need the extra headroom.
//
// Branch layout for 1F1: terminating polynomial when b is a non-positive
// integer; the two-part large-argument expansion when |w| >= 44 or when w is
// far enough from the real axis that the Taylor sum would cancel
// catastrophically; otherwise Taylor, through the reflection
// 1F1[b;c;w] = e^w 1F1[c-b;c;-w] when Re w < 0 so the summed series has a
// non-negative real argument. Worst-case relative error sits near the
// Taylor/expansion seam for nearly imaginary w (about 1e-11 at |w| = 25).
//
// 0F1 routes through the modified Bessel function I_mu (mu = cp-1, argument
// zeta = 2 sqrt(s), principal root): Taylor for |s| < 100, the compound
// expansion of I_mu beyond. Same seam behaviour near |s| = 100 for s < 0.
#pragma once

#include "humbert/gamma.hpp"

namespace humbert {
namespace detail {

using cld = cplx<long double>;

inline constexpr long double pi_ld = 3.14159265358979323846264338327950288L;

// plain Taylor sum of 1F1, caller guarantees a benign argument
inline cld f11_taylor(const cld& b, const cld& c, const cld& w) {
  const long double itol = precision_traits<long double>::eps / 4;
  cld term(1), sum(0);
  for (long k = 0; k < 4000; ++k) {
    sum += term;
    if (k >= 4 && std::abs(term) <=
                      itol * std::max(std::abs(sum), (long double)1e-30))
      return sum;
    term *= (b + (long double)k) /
            ((c + (long double)k) * (long double)(k + 1)) * w;
  }
  throw convergence_error("f11_taylor: no convergence in 4000 terms");
}

// one branch of a large-argument expansion: sum factor(k) products until the
// terms stop shrinking or fall below machine precision
template <class Ratio>
cld asym_sum(Ratio next_ratio, long kcap) {
  cld term(1), sum(0);
  long double prev = std::numeric_limits<long double>::max();
  for (long k = 0; k < kcap; ++k) {
    long double at = std::abs(term);
    if (k > 1 && at > prev) break;  // divergent tail reached: stop before it
    sum += term;
    if (at <= precision_traits<long double>::eps * std::abs(sum)) break;
    prev = at;
    term *= next_ratio(k);
  }
  return sum;
}

// two-part large-argument expansion of 1F1: an e^w w^{b-c} part and an
// algebraic w^{-b} part, each truncated at its smallest term
inline cld f11_asym(const cld& b, const cld& c, const cld& w) {
  const cld logw = std::log(w);
  const cld lgc = log_gamma(c);
  const long kcap = 2 * (long)std::abs(w) + 40;

  cld val(0);
  if (!is_nonpos_int(b)) {
    cld pre = safe_exp(w + (b - c) * logw + lgc - log_gamma(b));
    if (pre != cld(0))
      val += pre * asym_sum(
                       [&](long k) {
                         return (c - b + (long double)k) *
                                ((long double)1 - b + (long double)k) /
                                ((long double)(k + 1) * w);
                       },
                       kcap);
  }
  if (!is_nonpos_int(c - b)) {
    int sigma = std::arg(w) > -pi_ld / 2 ? 1 : -1;
    cld pre = safe_exp(-b * logw + lgc - log_gamma(c - b) +
                       cld(0, sigma * pi_ld) * b);
    if (pre != cld(0))
      val += pre * asym_sum(
                       [&](long k) {
                         return (b + (long double)k) *
                                (b - c + (long double)(1 + k)) /
                                ((long double)(k + 1) * (-w));
                       },
                       kcap);
  }
  return val;
}

inline cld f11(const cld& b, const cld& c, const cld& w) {
  if (is_nonpos_int(c) && !(is_nonpos_int(b) && -b.real() <= -c.real()))
    throw pole_error("f11: lower parameter at a non-positive integer");
  if (is_nonpos_int(b)) {  // terminating polynomial, valid for any w
    long j = std::lround((double)-b.real());
    cld term(1), sum(0);
    for (long k = 0;; ++k) {
      sum += term;
      if (k == j) return sum;
      term *= (b + (long double)k) /
              ((c + (long double)k) * (long double)(k + 1)) * w;
    }
  }
  const long double aw = std::abs(w);
  if (aw >= 44 || aw - std::abs(w.real()) >= 22) return f11_asym(b, c, w);
  if (w.real() < 0) return safe_exp(w) * f11_taylor(c - b, c, -w);
  return f11_taylor(b, c, w);
}

inline cld f01_taylor(const cld& cp, const cld& s) {
  const long double itol = precision_traits<long double>::eps / 4;
  cld term(1), sum(0);
  for (long k = 0; k < 2000; ++k) {
    sum += term;
    if (k >= 4 && std::abs(term) <=
                      itol * std::max(std::abs(sum), (long double)1e-30))
      return sum;
    term *= s / ((cp + (long double)k) * (long double)(k + 1));
  }
  throw convergence_error("f01_taylor: no convergence in 2000 terms");
}

// 0F1[;cp;s] = Gamma(cp) zeta^{1-cp} I_{cp-1}(zeta), zeta = 2 sqrt(s), with
// the compound expansion of I: e^zeta and e^{-zeta} parts sharing the
// coefficient recurrence a_{k+1} = a_k (4 mu^2 - (2k+1)^2) / (8(k+1))
inline cld f01_asym(const cld& cp, const cld& s) {
  const cld zeta = (long double)2 * std::sqrt(s);  // principal: Re zeta >= 0
  const cld mu = cp - (long double)1;
  const cld mu4 = (long double)4 * mu * mu;
  // Gamma(cp) (zeta/2)^{1-cp} / sqrt(2 pi zeta), folded into one exponent
  const cld common = ((long double)0.5 - cp) * std::log(zeta) +
                     (cp - (long double)1) * std::log((long double)2) +
                     log_gamma(cp) -
                     (long double)0.5 * std::log((long double)2 * pi_ld);
  const long kcap = 2 * (long)std::abs(zeta) + 40;

  auto coef_ratio = [&](long k) {
    return (mu4 - cld((long double)((2 * k + 1) * (2 * k + 1)))) /
           cld((long double)(8 * (k + 1)));
  };

  cld val(0);
  cld pre1 = safe_exp(zeta + common);
  if (pre1 != cld(0))
    val += pre1 * asym_sum([&](long k) { return -coef_ratio(k) / zeta; }, kcap);
  int sigma = zeta.imag() >= 0 ? 1 : -1;
  cld pre2 = safe_exp(-zeta + common +
                      cld(0, sigma * pi_ld) * (mu + (long double)0.5));
  if (pre2 != cld(0))
    val += pre2 * asym_sum([&](long k) { return coef_ratio(k) / zeta; }, kcap);
  return val;
}

inline cld f01(const cld& cp, const cld& s) {
  if (is_nonpos_int(cp))
    throw pole_error("f01: lower parameter at a non-positive integer");
  // the Taylor sum loses e^{|zeta| - Re zeta} (zeta = 2 sqrt s) to
  // cancellation; once that passes ~e^14 the large-argument expansion,
  // whose optimal truncation error is ~e^{-2|zeta|}, is the better route
  // even well below the plain |s| switch
  const cld zeta = cld(2) * std::sqrt(s);
  if (std::abs(s) >= 100 ||
      (std::abs(s) >= 50 && std::abs(zeta) - zeta.real() >= 14.4L))
    return f01_asym(cp, s);
  return f01_taylor(cp, s);
}

}  // namespace detail
}  // namespace humbert

// Asymptotic expansions of Psi1[a,b;c,cp;x,y] for both arguments large with
// the combined ratio xi = y/(1-x) held in a fixed band:
//
//  - coeff_a_k: the coefficients a_k of the exponential series, finite
//    double sums with a terminating 3F2 core; functions of xi alone.
//  - psi1_asym_ypos: the expansion on the ray y real -> +infinity,
//        Psi1 ~ [G(c)G(cp)/(G(a)G(c-b))] y^{a-2b-cp} e^y sum_k a_k y^{-k}.
//  - choose_w_general / psi1_asym_general: the three-block expansion for y
//    off the ray [0, inf): two algebraic blocks in powers of 1/(1-x) and
//    1/(-y) truncated at order M, plus the same exponential series, here
//    truncated at N and usually negligible.
//  - leading_term: the k = 0 truncation either form reduces to, backing
//    normalized Psi1 / L convergence tables.
//
// All powers take principal branches, and all internals run in 80-bit
// arithmetic whatever the interface precision.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "humbert/gamma.hpp"
#include "humbert/params.hpp"
#include "humbert/psi1.hpp"
#include "humbert/series.hpp"

namespace humbert {

// A one-parameter point family (x, y) = (t x0, t y0) for convergence
// studies: the expansions are uniform exactly when the combined ratio stays
// inside a fixed band as t grows, which holds for any direction with
// x0 != 0 and fails for x0 = 0 (the ratio then grows linearly in t).
template <class Real>
struct RayScaling {
  cplx<Real> x0{}, y0{};  // direction
  Real t{1};              // scale, > 0

  cplx<Real> x() const { return t * x0; }
  cplx<Real> y() const { return t * y0; }
  cplx<Real> gamma_ratio() const {
    return t * y0 / (cplx<Real>(1) - t * x0);
  }
};

// truncation configuration of the general expansion: order w with the
// margin eps its fractional offsets were tested against, the algebraic
// depth M it implies, and the exponential depth N
struct GeneralAsymConfig {
  double w = 0;
  double eps = 0;
  long M = 0;  // algebraic blocks keep k = 0..M; equals floor(w + Re(b-a))
  long N = 1;  // exponential block keeps k < N
};

namespace detail {

// true when v lies within tol of one of 0, -1, ..., -(reach-1): the
// denominators a terminating inner sum of length reach walks through
inline bool near_reachable_pole(const cld& v, long reach, long double tol) {
  if (std::abs(v.imag()) > tol) return false;
  for (long m = 0; m < reach; ++m)
    if (std::abs(v + cld((long double)m)) < tol) return true;
  return false;
}

// a_k(x, y) = sum_{j=0}^{k} (b)_j (b-a+cp)_{k-j} (j+b-a+1)_{k-j} / (j!(k-j)!)
//             3F2[-j, j-k, c+cp-a-1; b-a+cp, a-b-k; 1] xi^{b+j}
// with xi = y/(1-x).  The 3F2 terminates after min(j, k-j) + 1 terms, so
// the whole thing is a finite sum and a function of xi alone.  Its lower
// parameter a-b-k only poisons the sum when one of the denominators it
// generates lands near zero before termination; an integer a-b as such is
// harmless, which the reachability test (max termination index floor(k/2))
// makes precise.
inline cld coeff_a_k_impl(const cld& a, const cld& b, const cld& c,
                          const cld& cp, long k, const cld& xi) {
  const cld ONE(1);
  const cld bac = b - a + cp;
  const cld abk = a - b - cld((long double)k);
  if (near_reachable_pole(abk, k / 2, 1e-6L))
    throw pole_error(
        "coeff_a_k: lower parameter a-b-k within 1e-6 of a non-positive "
        "integer reachable before termination");

  const cld xib = cpow(xi, b);
  cld sum(0);
  cld bj(1);           // (b)_j
  long double jf = 1;  // j!
  cld xij(1);          // xi^j
  for (long j = 0; j <= k; ++j) {
    const cld jj((long double)j);
    if (j > 0) {
      bj *= b + (jj - ONE);
      jf *= (long double)j;
      xij *= xi;
    }
    const cld f = f3f2_unity_terminating<long double>(
        {{-jj, jj - cld((long double)k), c + cp - a - ONE}, {bac, abk}});
    long double kjf = 1;  // (k-j)!
    for (long m = 2; m <= k - j; ++m) kjf *= (long double)m;
    sum += bj * pochhammer(bac, k - j) * pochhammer(jj + b - a + ONE, k - j) /
           (jf * kjf) * f * xij;
  }
  return xib * sum;
}

struct ExpBlock {
  cld value{};
  long double omitted = 0;  // magnitude of the first omitted term
};

// y^{a-2b-cp} e^y sum_{k<N} a_k y^{-k}, shared by the positive-ray
// expansion, the exponential block of the general one, and the leading
// term.  The omitted-term magnitude backs the first-omitted-term error
// estimates; if a_N itself is unavailable the last included term stands in.
inline ExpBlock exp_block(const cld& a, const cld& b, const cld& c,
                          const cld& cp, const cld& X, const cld& Y, long N) {
  const cld ONE(1);
  const cld xi = Y / (ONE - X);
  const cld core = cpow(Y, a - b - b - cp) * safe_exp(Y);
  cld sum(0), ypow(1);
  long double lastt = 0;
  for (long k = 0; k < N; ++k) {
    const cld t = coeff_a_k_impl(a, b, c, cp, k, xi) * ypow;
    sum += t;
    lastt = std::abs(t);
    ypow /= Y;
  }
  ExpBlock out;
  out.value = core * sum;
  try {
    out.omitted =
        std::abs(core) * std::abs(coeff_a_k_impl(a, b, c, cp, N, xi) * ypow);
  } catch (const pole_error&) {
    out.omitted = std::abs(core) * lastt;
  }
  return out;
}

struct AlgBlocks {
  cld sum{};  // gamma prefactors included
  long double err = 0;
  long terms = 0;
  bool degraded = false;
};

// The two algebraic blocks of the general expansion, truncated at order M
// inclusive:
//   G(c)G(b-a)/(G(b)G(c-a)) sum_k (a)_k(c-b)_k/((a-b+1)_k k!)
//       2F2[a-c+1, a+k; cp, a-b+1+k; xi] (1-x)^{-a-k}
// + G(c)G(cp)G(a-b)/(G(a)G(c-b)G(b-a+cp)) sum_k (a-b)_k(a-b-cp+1)_k/k!
//       2F2[b, b-c+1-k; b-a+1-k, b-a+cp-k; xi] (y/(x-1))^b (-y)^{-a-k}.
// When b-a+cp sits on a non-positive integer the second block's gamma
// prefactor vanishes against a divergent inner series; the product has a
// finite limit this closed form cannot produce, so the lower-parameter
// guard below raises instead of silently dropping the block.
inline AlgBlocks alg_blocks(const cld& a, const cld& b, const cld& c,
                            const cld& cp, const cld& X, const cld& Y, long M,
                            const TruncationPolicy& policy) {
  const cld ONE(1);
  const cld OMX = ONE - X;
  const cld xi = Y / OMX;
  AlgBlocks out;

  const cld G1 = gamma_ratio<long double>({c, b - a}, {b, c - a});
  cld coef(1);
  cld pw = cpow(OMX, -a);
  for (long k = 0; k <= M; ++k) {
    const cld kk((long double)k);
    const auto f =
        inner_2f2(a - c + ONE, a + kk, cp, a - b + ONE + kk, 0, xi, policy);
    out.sum += G1 * coef * f.value * pw;
    out.err += std::abs(G1 * coef * pw) * f.err;
    out.terms += f.terms;
    out.degraded = out.degraded || f.degraded;
    coef *= (a + kk) * (c - b + kk) / ((a - b + ONE + kk) * (kk + ONE));
    pw /= OMX;
  }

  const cld G2 =
      gamma_ratio<long double>({c, cp, a - b}, {a, c - b, b - a + cp});
  TruncationPolicy tight = policy;
  tight.rel_tol = 1e-17;
  tight.max_terms = std::max(policy.max_terms, long(100000));
  const long double loss = taylor_loss(xi);
  cld coef2(1);
  cld pwy = cpow(Y / (X - ONE), b) * cpow(-Y, -a);
  for (long k = 0; k <= M; ++k) {
    const cld kk((long double)k);
    const cld l1 = b - a + ONE - kk;
    const cld l2 = b - a + cp - kk;
    if (is_nonpos_int(l1, 1e-6L) || is_nonpos_int(l2, 1e-6L))
      throw pole_error(
          "psi1 asymptotics: second-block lower parameter within 1e-6 of "
          "a non-positive integer at order k=" +
          std::to_string(k));
    const HypParams<long double> par{{b, b - c + ONE - kk}, {l1, l2}};
    const auto r = pfq<long double>(par, xi, tight);
    out.sum += G2 * coef2 * r.value * pwy;
    out.err += std::abs(G2 * coef2 * pwy) *
               (std::abs(r.value) * loss + r.err_estimate);
    out.terms += r.terms_used;
    coef2 *= (a - b + kk) * (a - b - cp + ONE + kk) / (kk + ONE);
    pwy /= -Y;
  }
  return out;
}

// the y plane carries a pole lattice marching along b - a + Z; points
// within the exclusion radius of it void the expansion's error control
inline void check_y_exclusion(const cld& Y, const cld& bma,
                              long double radius, const char* who) {
  const cld s = Y - bma;
  if (std::abs(s.imag()) >= radius) return;
  const long double k0 = std::floor(s.real() + 0.5L);
  if (std::abs(s - cld(k0)) < radius)
    throw exclusion_error(
        std::string(who) +
        ": y within the exclusion radius of the lattice b - a + k");
}

}  // namespace detail

// Coefficient a_k of the exponential expansion; see coeff_a_k_impl for the
// closed form.  Requires x != 1; k >= 0.
template <class Real>
cplx<Real> coeff_a_k(const Psi1Params<Real>& params, long k,
                     const cplx<Real>& x, const cplx<Real>& y) {
  params.validate();
  if (k < 0) throw domain_error("coeff_a_k: k must be >= 0");
  if (x == cplx<Real>(1)) throw domain_error("coeff_a_k: x = 1");
  using detail::cld;
  const cld a((long double)params.a.real(), (long double)params.a.imag());
  const cld b((long double)params.b.real(), (long double)params.b.imag());
  const cld c((long double)params.c.real(), (long double)params.c.imag());
  const cld cp((long double)params.cp.real(), (long double)params.cp.imag());
  const cld X((long double)x.real(), (long double)x.imag());
  const cld Y((long double)y.real(), (long double)y.imag());
  const cld v = detail::coeff_a_k_impl(a, b, c, cp, k, Y / (cld(1) - X));
  return cplx<Real>((Real)v.real(), (Real)v.imag());
}

// Expansion on the ray y real -> +infinity with 1-x of the same order:
//   Psi1 ~ [G(c)G(cp)/(G(a)G(c-b))] y^{a-2b-cp} e^y sum_{k>=0} a_k y^{-k},
// truncated after K terms; err_estimate is the first omitted term.  The
// hypotheses need a-b and a-c off the integers and y real-positive (arg
// tolerance 1e-8).  The ratio band [gamma_lo, gamma_hi] only warns: the
// expansion degrades gradually as xi leaves any fixed band rather than
// failing at a sharp edge.
template <class Real>
ApproxResult<Real> psi1_asym_ypos(const Psi1Params<Real>& params,
                                  const cplx<Real>& x, const cplx<Real>& y,
                                  long K, double gamma_lo = 1e-2,
                                  double gamma_hi = 1e2) {
  params.validate();
  if (K < 1) throw domain_error("psi1_asym_ypos: K must be >= 1");
  if (!params.outer_series_ok())
    throw domain_error(
        "psi1_asym_ypos: requires a-b and a-c away from the integers");
  if (!in_psi1_domain(x))
    throw domain_error("psi1_asym_ypos: x on the branch cut [1, inf)");
  if (!(y.real() > Real(0)) ||
      std::abs(static_cast<double>(std::arg(y))) > 1e-8)
    throw domain_error(
        "psi1_asym_ypos: requires y real and positive (the expansion's ray)");

  using detail::cld;
  const cld a((long double)params.a.real(), (long double)params.a.imag());
  const cld b((long double)params.b.real(), (long double)params.b.imag());
  const cld c((long double)params.c.real(), (long double)params.c.imag());
  const cld cp((long double)params.cp.real(), (long double)params.cp.imag());
  const cld X((long double)x.real(), (long double)x.imag());
  const cld Y((long double)y.real(), (long double)y.imag());

  const cld G3 = gamma_ratio<long double>({c, cp}, {a, c - b});
  const auto blk = detail::exp_block(a, b, c, cp, X, Y, K);
  const cld total = G3 * blk.value;

  ApproxResult<Real> res;
  res.method = "asym_ypos";
  res.value = cplx<Real>((Real)total.real(), (Real)total.imag());
  res.err_estimate =
      (Real)(std::abs(G3) * blk.omitted +
             4 * precision_traits<long double>::eps * std::abs(total));
  res.terms_used = K;
  res.converged = true;
  const long double axi = std::abs(Y / (cld(1) - X));
  if (axi < (long double)gamma_lo || axi > (long double)gamma_hi)
    res.warnings.push_back(
        "ratio |y/(1-x)| outside the calibrated band; asymptotic error "
        "control is unreliable");
  return res;
}

// Smallest w >= target_order whose offsets w - Re(a-b) and w - Re(a-c) - 1
// have fractional parts in (eps, 1), scanning upward in steps of eps/2 with
// the same margin-halving fallback as choose_w.  target_order must already
// exceed the admissibility bound max{Re(a-b)+1, Re(a-c)+2}, which makes the
// emitted M = floor(w + Re(b-a)) automatically >= 1.  N is the requested
// order rounded up, so the exponential block cannot be the accuracy
// bottleneck when e^{Re y} is O(1).
template <class Real>
GeneralAsymConfig choose_w_general(const Psi1Params<Real>& params,
                                   double target_order, double eps) {
  params.validate();
  if (!(eps > 0 && eps < 0.5))
    throw domain_error("choose_w_general: eps must lie in (0, 1/2)");
  const double rab = static_cast<double>((params.a - params.b).real());
  const double rac = static_cast<double>((params.a - params.c).real());
  if (!(target_order > std::max(rab + 1.0, rac + 2.0)))
    throw domain_error(
        "choose_w_general: target_order must exceed max{Re(a-b)+1, "
        "Re(a-c)+2}");

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
      if (frac_ok(w - rab, e) && frac_ok(w - rac - 1.0, e)) {
        GeneralAsymConfig cfg;
        cfg.w = w;
        cfg.eps = e;
        cfg.M = static_cast<long>(std::floor(w - rab));
        cfg.N = std::max(1L, static_cast<long>(std::ceil(target_order)));
        return cfg;
      }
    }
    if (last)
      throw convergence_error(
          "choose_w_general: no admissible truncation order");
  }
}

// The expansion covering y off the ray [0, inf): the two algebraic blocks
// truncated at cfg.M plus the exponential block truncated at cfg.N.  The
// error estimate attaches unit constants to the two remainder orders,
//   |y|^{-Re b - w}  +  |y|^{Re(a-2b-cp) - N} e^{Re y},
// and adds the inner-route error accumulation on top.  Requires a-b, a-c
// and b-c off the integers, |arg(1-x)| < pi, |arg(-y)| < pi, and y at least
// eps_excl away from the lattice b - a + Z.
template <class Real>
ApproxResult<Real> psi1_asym_general(const Psi1Params<Real>& params,
                                     const cplx<Real>& x, const cplx<Real>& y,
                                     const GeneralAsymConfig& cfg,
                                     const TruncationPolicy& policy = {},
                                     double eps_excl = 0.125,
                                     double gamma_lo = 1e-2,
                                     double gamma_hi = 1e2) {
  params.validate();
  policy.validate();
  if (!params.general_asym_ok())
    throw domain_error(
        "psi1_asym_general: requires a-b, a-c and b-c away from the "
        "integers");
  if (cfg.M < 1 || cfg.N < 1)
    throw domain_error("psi1_asym_general: config requires M >= 1, N >= 1");
  const double rab = static_cast<double>((params.a - params.b).real());
  const double rac = static_cast<double>((params.a - params.c).real());
  if (!(cfg.w > std::max(rab + 1.0, rac + 2.0) - 1e-9))
    throw domain_error(
        "psi1_asym_general: w below the admissibility bound max{Re(a-b)+1, "
        "Re(a-c)+2}");
  if (!in_psi1_domain(x))
    throw domain_error("psi1_asym_general: x on the branch cut [1, inf)");
  if (y.imag() == Real(0) && y.real() >= Real(0))
    throw domain_error("psi1_asym_general: requires y off the ray [0, inf)");

  using detail::cld;
  const cld a((long double)params.a.real(), (long double)params.a.imag());
  const cld b((long double)params.b.real(), (long double)params.b.imag());
  const cld c((long double)params.c.real(), (long double)params.c.imag());
  const cld cp((long double)params.cp.real(), (long double)params.cp.imag());
  const cld X((long double)x.real(), (long double)x.imag());
  const cld Y((long double)y.real(), (long double)y.imag());
  detail::check_y_exclusion(Y, b - a, (long double)eps_excl,
                            "psi1_asym_general");

  const auto alg = detail::alg_blocks(a, b, c, cp, X, Y, cfg.M, policy);
  const cld G3 = gamma_ratio<long double>({c, cp}, {a, c - b});
  const auto ex = detail::exp_block(a, b, c, cp, X, Y, cfg.N);
  const cld total = alg.sum + G3 * ex.value;

  const long double ay = std::abs(Y);
  const long double rem_alg =
      std::pow(ay, -(long double)b.real() - (long double)cfg.w);
  const long double rem_exp =
      std::pow(ay, (a - b - b - cp).real() - (long double)cfg.N) *
      std::exp(std::min(Y.real(), 11000.0L));

  ApproxResult<Real> res;
  res.method = "asym_general";
  res.value = cplx<Real>((Real)total.real(), (Real)total.imag());
  res.err_estimate =
      (Real)(rem_alg + rem_exp + alg.err +
             8 * precision_traits<long double>::eps * std::abs(total));
  res.terms_used = alg.terms + cfg.N;
  res.converged = true;
  if (alg.degraded)
    res.warnings.push_back(
        "inner series accuracy limited in this y range; err_estimate "
        "reflects the achieved bound");
  const long double axi = std::abs(Y / (cld(1) - X));
  if (axi < (long double)gamma_lo || axi > (long double)gamma_hi)
    res.warnings.push_back(
        "ratio |y/(1-x)| outside the calibrated band; asymptotic error "
        "control is unreliable");
  return res;
}

// The k = 0 truncation backing normalized Psi1 / L tables.  Regime pick: y
// real-positive within arg tolerance 1e-8 takes the exponential ray form
//   L = G3 y^{a-2b-cp} e^y xi^b,
// a pure closed form that stays meaningful whenever the gamma prefactor is
// finite, so it carries no integer-difference gates (reflected parameter
// sets with a = b land here legitimately).  Any other y takes the k = 0
// terms of the three-block expansion and inherits its hypothesis surface:
// a-b, a-c off the integers and y off the exclusion lattice.  y = 0 lies in
// no regime.
template <class Real>
cplx<Real> leading_term(const Psi1Params<Real>& params, const cplx<Real>& x,
                        const cplx<Real>& y,
                        const TruncationPolicy& policy = {},
                        double eps_excl = 0.125) {
  params.validate();
  policy.validate();
  if (!in_psi1_domain(x))
    throw domain_error("leading_term: x on the branch cut [1, inf)");
  if (y == cplx<Real>(0))
    throw domain_error("leading_term: y = 0 lies in no asymptotic regime");

  using detail::cld;
  const cld a((long double)params.a.real(), (long double)params.a.imag());
  const cld b((long double)params.b.real(), (long double)params.b.imag());
  const cld c((long double)params.c.real(), (long double)params.c.imag());
  const cld cp((long double)params.cp.real(), (long double)params.cp.imag());
  const cld X((long double)x.real(), (long double)x.imag());
  const cld Y((long double)y.real(), (long double)y.imag());
  const cld G3 = gamma_ratio<long double>({c, cp}, {a, c - b});

  if (y.real() > Real(0) &&
      std::abs(static_cast<double>(std::arg(y))) <= 1e-8) {
    const cld v =
        G3 * cpow(Y, a - b - b - cp) * safe_exp(Y) * cpow(Y / (cld(1) - X), b);
    return cplx<Real>((Real)v.real(), (Real)v.imag());
  }

  if (is_int(params.a - params.b) || is_int(params.a - params.c))
    throw domain_error(
        "leading_term: a-b or a-c at an integer leaves the off-ray "
        "expansion's coefficients undefined");
  detail::check_y_exclusion(Y, b - a, (long double)eps_excl, "leading_term");
  const auto alg = detail::alg_blocks(a, b, c, cp, X, Y, 0, policy);
  const auto ex = detail::exp_block(a, b, c, cp, X, Y, 1);
  const cld v = alg.sum + G3 * ex.value;
  return cplx<Real>((Real)v.real(), (Real)v.imag());
}

}  // namespace humbert

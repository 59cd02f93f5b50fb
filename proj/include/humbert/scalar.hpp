// Base vocabulary shared by every module: complex scalar alias, error
// hierarchy, truncation policy, result/report records, deterministic RNG,
// and principal-branch helpers.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace humbert {

template <class Real>
using cplx = std::complex<Real>;

// ---------------------------------------------------------------------------
// Errors. Two families matter for exit codes: domain/hypothesis problems
// (the input is outside what the method is defined for) and convergence
// problems (the input is fine but this precision/budget could not deliver).
// ---------------------------------------------------------------------------
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct domain_error : error {
  using error::error;
};

// gamma/Pochhammer argument at (or indistinguishably close to) a pole
struct pole_error : domain_error {
  using domain_error::domain_error;
};

// input inside a configured exclusion neighbourhood of a lattice point
struct exclusion_error : domain_error {
  using domain_error::domain_error;
};

struct convergence_error : error {
  using error::error;
};

// a magnitude left the representable range of the active precision;
// callers may retry with a wider backend
struct overflow_error : convergence_error {
  using convergence_error::convergence_error;
};

// ---------------------------------------------------------------------------
// Records.
// ---------------------------------------------------------------------------
struct TruncationPolicy {
  double rel_tol = 1e-12;        // in (0, 1)
  long max_terms = 100000;       // >= stagnation_window
  int stagnation_window = 5;     // >= 2

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
      throw domain_error("TruncationPolicy: rel_tol must lie in (0, 1)");
    if (stagnation_window < 2 || max_terms < stagnation_window)
      throw domain_error(
          "TruncationPolicy: require max_terms >= stagnation_window >= 2");
  }
};

template <class Real>
struct ApproxResult {
  cplx<Real> value{};
  Real err_estimate{};  // absolute error estimate on value
  long terms_used = 0;
  bool converged = false;
  std::string method{};
  std::vector<std::string> warnings{};
};

// lhs <= rhs * (1 + tol_slack) is the "holds" convention; the slack absorbs
// last-bit rounding when an inequality is attained with equality.
template <class Real>
struct BoundReport {
  Real lhs{};
  Real rhs{};
  bool holds = false;
};

inline constexpr double bound_tol_slack = 1e-9;

template <class Real>
BoundReport<Real> make_bound_report(Real lhs, Real rhs) {
  return {lhs, rhs, lhs <= rhs * Real(1 + bound_tol_slack)};
}

// ---------------------------------------------------------------------------
// Deterministic RNG for sampling commands and property tests. Fixed mapping
// from mt19937_64 bits so streams are reproducible across platforms.
// ---------------------------------------------------------------------------
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// Scalar helpers.
// ---------------------------------------------------------------------------
template <class Real>
bool is_finite(const cplx<Real>& z) {
  return std::isfinite(static_cast<double>(z.real())) &&
         std::isfinite(static_cast<double>(z.imag()));
}

// distance from z to the nearest integer on the real axis
template <class Real>
Real dist_to_int(const cplx<Real>& z) {
  Real r = z.real();
  Real d = std::abs(r - std::round(r));
  return std::hypot(d, z.imag());
}

// distance from z to the nearest non-positive integer
template <class Real>
Real dist_to_nonpos_int(const cplx<Real>& z) {
  Real r = std::min(std::round(z.real()), Real(0));
  return std::abs(z - cplx<Real>(r, 0));
}

// exact-in-floating-point detection of integers (used for terminating series
// and hypothesis gates); tol covers parse/arithmetic noise only
template <class Real>
bool is_int(const cplx<Real>& z, Real tol = Real(1e-9)) {
  return dist_to_int(z) <= tol;
}

template <class Real>
bool is_nonpos_int(const cplx<Real>& z, Real tol = Real(1e-9)) {
  return dist_to_nonpos_int(z) <= tol;
}

inline double frac_part(double x) { return x - std::floor(x); }

// principal-branch complex power: exp(e log b), arg(log) in (-pi, pi].
// b = 0 maps to 0 for Re(e) > 0 and 1 for e = 0; otherwise it is a pole.
template <class Real>
cplx<Real> cpow(const cplx<Real>& b, const cplx<Real>& e) {
  if (b == cplx<Real>(0)) {
    if (e == cplx<Real>(0)) return cplx<Real>(1);
    if (e.real() > 0) return cplx<Real>(0);
    throw pole_error("cpow: 0 raised to a power with non-positive real part");
  }
  cplx<Real> r = std::exp(e * std::log(b));
  if (!is_finite(r)) throw overflow_error("cpow: result overflows");
  return r;
}

// exp with an overflow check (complex exp of huge real part yields inf)
template <class Real>
cplx<Real> safe_exp(const cplx<Real>& z) {
  if (z.real() > std::log(std::numeric_limits<Real>::max()) - Real(2))
    throw overflow_error("safe_exp: exponent too large for this precision");
  return std::exp(z);
}

// ---------------------------------------------------------------------------
// Precision traits: the two supported working precisions. "standard" maps to
// double, "extended" to 80-bit long double.
// ---------------------------------------------------------------------------
template <class Real>
struct precision_traits;

template <>
struct precision_traits<double> {
  static constexpr const char* name = "standard";
  static constexpr double eps = std::numeric_limits<double>::epsilon();
  static constexpr double stirling_radius = 12.0;
  static constexpr int bernoulli_terms = 10;
};

template <>
struct precision_traits<long double> {
  static constexpr const char* name = "extended";
  static constexpr long double eps =
      std::numeric_limits<long double>::epsilon();
  static constexpr long double stirling_radius = 16.0L;
  static constexpr int bernoulli_terms = 12;
};

}  // namespace humbert

#include <doctest.h>

#include <cmath>
#include <complex>

#include "humbert/quadrature.hpp"
#include "humbert/series.hpp"
#include "reference_values.hpp"

namespace {

using humbert::cplx;

template <class Real>
long double rel_err(const cplx<Real>& got,
                    const std::complex<long double>& want) {
  const std::complex<long double> g(got.real(), got.imag());
  return std::abs(g - want) / std::abs(want);
}

}  // namespace

TEST_CASE_TEMPLATE("adaptive panels integrate smooth and oscillatory ranges",
                   Real, double, long double) {
  // a degree-5 polynomial is exact in a single 16-point panel
  auto poly = [](Real u) { return cplx<Real>(u * u * u * u * u); };
  auto r1 = humbert::detail::adaptive_gl<Real>(poly, Real(0), Real(1),
                                               Real(1e-12));
  CHECK(std::abs(r1.value.real() - Real(1) / 6) <= Real(1e-15));
  CHECK(r1.evals == 48);
  CHECK(r1.converged);

  auto ex = [](Real u) { return cplx<Real>(std::exp(u)); };
  auto r2 =
      humbert::detail::adaptive_gl<Real>(ex, Real(0), Real(3), Real(1e-13));
  CHECK(std::abs(r2.value.real() - (std::exp(Real(3)) - 1)) <=
        Real(1e-13) * std::exp(Real(3)));
  CHECK(r2.converged);

  // forty radians of cosine force the bisection to work
  auto osc = [](Real u) { return cplx<Real>(std::cos(u)); };
  auto r3 =
      humbert::detail::adaptive_gl<Real>(osc, Real(0), Real(40), Real(1e-12));
  CHECK(std::abs(r3.value.real() - std::sin(Real(40))) <= Real(1e-11));
  CHECK(r3.evals > 96);
  CHECK(r3.converged);

  // complex-valued integrand
  auto rot = [](Real u) { return std::exp(cplx<Real>(0, u)); };
  auto r4 =
      humbert::detail::adaptive_gl<Real>(rot, Real(0), Real(1), Real(1e-13));
  const cplx<Real> want =
      (std::exp(cplx<Real>(0, 1)) - cplx<Real>(1)) / cplx<Real>(0, 1);
  CHECK(std::abs(r4.value - want) <= Real(1e-13));
}

TEST_CASE_TEMPLATE("tanh-sinh absorbs endpoint singularities", Real, double,
                   long double) {
  const Real tol = 200 * std::numeric_limits<Real>::epsilon();

  // left endpoint: u^{-1/2}
  auto f1 = [](Real x, Real) { return cplx<Real>(1 / std::sqrt(x)); };
  auto r1 = humbert::detail::tanh_sinh_01<Real>(f1, Real(0));
  CHECK(r1.converged);
  CHECK(std::abs(r1.value.real() - 2) <= 2 * tol);

  // right endpoint, reached through the separately carried 1-x
  auto f2 = [](Real, Real omx) { return cplx<Real>(1 / std::sqrt(omx)); };
  auto r2 = humbert::detail::tanh_sinh_01<Real>(f2, Real(0));
  CHECK(r2.converged);
  CHECK(std::abs(r2.value.real() - 2) <= 2 * tol);

  // logarithmic singularity
  auto f3 = [](Real x, Real) { return cplx<Real>(-std::log(x)); };
  auto r3 = humbert::detail::tanh_sinh_01<Real>(f3, Real(0));
  CHECK(r3.converged);
  CHECK(std::abs(r3.value.real() - 1) <= tol);

  // smooth integrand for reference
  auto f4 = [](Real x, Real) { return cplx<Real>(std::exp(x)); };
  auto r4 = humbert::detail::tanh_sinh_01<Real>(f4, Real(0));
  CHECK(r4.converged);
  CHECK(std::abs(r4.value.real() - (std::exp(Real(1)) - 1)) <= tol);
}

TEST_CASE_TEMPLATE("Euler integral reproduces hypergeometric values", Real,
                   double, long double) {
  auto C = [](Real v) { return cplx<Real>(v); };

  auto r = humbert::hyp2f1_euler_integral(C(0.5), C(0.75), C(2), C(-3));
  CHECK(rel_err(r.value, refvals::f21_h_34_2_m3) <= 1e-13L);
  CHECK(r.converged);
  CHECK(r.method == "euler_integral");

  // interior of the unit disc against the direct series
  {
    humbert::TruncationPolicy pol;
    pol.rel_tol = 1e-15;
    auto series =
        humbert::pfq<Real>({{C(0.5), C(0.75)}, {C(2)}}, C(0.5), pol);
    auto quad = humbert::hyp2f1_euler_integral(C(0.5), C(0.75), C(2), C(0.5));
    CHECK(std::abs(quad.value - series.value) <=
          Real(1e-13) * std::abs(series.value));
  }

  // complex continuation checked through the Pfaff transformation
  {
    const cplx<Real> z(2, 3);
    const cplx<Real> zp = z / (z - C(1));
    auto lhs = humbert::hyp2f1_euler_integral(C(0.5), C(0.75), C(2), z);
    auto rhs = humbert::hyp2f1_euler_integral(C(0.5), C(1.25), C(2), zp);
    const cplx<Real> mapped =
        humbert::cpow(C(1) - z, C(-0.5)) * rhs.value;
    CHECK(std::abs(lhs.value - mapped) <= Real(1e-12) * std::abs(lhs.value));
  }

  CHECK_THROWS_AS(humbert::hyp2f1_euler_integral(C(1), C(-0.5), C(2), C(-3)),
                  humbert::domain_error);
  CHECK_THROWS_AS(humbert::hyp2f1_euler_integral(C(1), C(2), C(0.5), C(-3)),
                  humbert::domain_error);
  CHECK_THROWS_AS(humbert::hyp2f1_euler_integral(C(1), C(0.5), C(2), C(1.5)),
                  humbert::domain_error);
}

#include <doctest.h>

#include <cmath>
#include <complex>

#include "humbert/series.hpp"
#include "reference_values.hpp"

using humbert::ApproxResult;
using humbert::cplx;
using humbert::HypParams;
using humbert::Psi1Params;
using humbert::TruncationPolicy;

namespace {

template <class Real>
long double rel_err(const cplx<Real>& got,
                    const std::complex<long double>& want) {
  std::complex<long double> g(got.real(), got.imag());
  return std::abs(g - want) / std::abs(want);
}

}  // namespace

TEST_CASE_TEMPLATE("pfq trivial cases", Real, double, long double) {
  using C = cplx<Real>;
  TruncationPolicy pol;

  // 0F0[;;z] = exp(z)
  auto e1 = humbert::pfq<Real>({{}, {}}, C(1), pol);
  CHECK(e1.converged);
  CHECK(std::abs(e1.value.real() - std::exp(Real(1))) < Real(1e-14));

  // zero argument sums to exactly 1
  auto one = humbert::pfq<Real>({{C(1), C(Real(0.5))}, {C(2), C(3)}}, C(0), pol);
  CHECK(one.value == C(1));
  CHECK(one.converged);

  // equal upper and lower parameters cancel: 1F1[a;a;z] = exp(z)
  auto e2 = humbert::pfq<Real>({{C(Real(0.7))}, {C(Real(0.7))}}, C(Real(-2)), pol);
  CHECK(std::abs(e2.value.real() - std::exp(Real(-2))) < Real(1e-14));

  // 1F0[a;;z] = (1-z)^{-a} inside the unit disc
  auto bin = humbert::pfq<Real>({{C(Real(0.8))}, {}}, C(Real(0.3)), pol);
  CHECK(std::abs(bin.value.real() - std::pow(Real(0.7), Real(-0.8))) <
        Real(1e-13));
}

TEST_CASE_TEMPLATE("pfq frozen oracle values", Real, double, long double) {
  using C = cplx<Real>;
  TruncationPolicy pol;
  pol.rel_tol = 1e-15;
  const C h(Real(0.5)), t(Real(1) / 3), q(Real(0.25));

  auto f22 = humbert::pfq<Real>({{C(1), h}, {t, q}}, C(-2), pol);
  CHECK(rel_err(f22.value, refvals::f22_1_h_t_q_m2) < Real(1e-13));
  CHECK(f22.converged);
  CHECK(f22.method == "pfq");
  CHECK(f22.terms_used > 5);

  auto f11 = humbert::pfq<Real>({{C(1)}, {q}}, C(2), pol);
  CHECK(rel_err(f11.value, refvals::f11_1_q_2) < Real(1e-13));

  auto f21 = humbert::pfq<Real>({{C(1), h}, {t}}, C(Real(0.5)), pol);
  CHECK(rel_err(f21.value, refvals::f21_1_h_t_05) < Real(1e-13));
}

TEST_CASE("pfq cancellation-prone frozen values, extended precision") {
  using C = cplx<long double>;
  TruncationPolicy pol;
  pol.rel_tol = 1e-17;
  const C h(0.5L), t(1.0L / 3), q(0.25L);

  // alternating sum with a large interior term bulge; the tolerance sits
  // above the roundoff floor eps * max_term / |value|
  auto mid = humbert::pfq<long double>({{C(1), h}, {t, q}}, C(-15), pol);
  CHECK(rel_err(mid.value, refvals::f22_mid_m15) < 1e-10L);

  auto bes = humbert::pfq<long double>({{}, {q}}, C(-150), pol);
  CHECK(rel_err(bes.value, refvals::f01_m150) < 1e-8L);
}

TEST_CASE_TEMPLATE("pfq parameter list order does not matter", Real, double,
                   long double) {
  using C = cplx<Real>;
  TruncationPolicy pol;
  const C h(Real(0.5)), t(Real(1) / 3), q(Real(0.25));
  const C z(Real(-1.3), Real(0.4));

  auto r1 = humbert::pfq<Real>({{C(1), h}, {t, q}}, z, pol);
  auto r2 = humbert::pfq<Real>({{h, C(1)}, {q, t}}, z, pol);
  CHECK(rel_err(r1.value, r2.value) < Real(1e-14));
}

TEST_CASE("pfq divergent and singular inputs are rejected") {
  using C = cplx<double>;
  TruncationPolicy pol;
  const C h(0.5), t(1.0 / 3);

  // Gauss series outside its disc of convergence
  CHECK_THROWS_AS(humbert::pfq<double>({{C(1), h}, {t}}, C(1), pol),
                  humbert::domain_error);
  CHECK_THROWS_AS(humbert::pfq<double>({{C(1), h}, {t}}, C(-3), pol),
                  humbert::domain_error);
  CHECK_THROWS_AS(
      humbert::pfq<double>({{C(1), h}, {t}}, std::polar(1.0, 2.0), pol),
      humbert::domain_error);

  // too many upper parameters: zero radius of convergence
  CHECK_THROWS_AS(humbert::pfq<double>({{C(1), C(2), h}, {t}}, C(0.1), pol),
                  humbert::domain_error);
  CHECK(humbert::pfq<double>({{C(1), C(2), h}, {t}}, C(0), pol).value == C(1));

  // non-positive-integer lower parameter without termination
  CHECK_THROWS_AS(humbert::pfq<double>({{C(1)}, {C(0)}}, C(0.5), pol),
                  humbert::pole_error);
  CHECK_THROWS_AS(humbert::pfq<double>({{C(1)}, {C(-2)}}, C(0.5), pol),
                  humbert::pole_error);
  // pole hit before the terminating index
  CHECK_THROWS_AS(humbert::pfq<double>({{C(-3), C(1)}, {C(-1)}}, C(0.5), pol),
                  humbert::pole_error);
}

TEST_CASE("pfq terminating series are summed exactly") {
  using C = cplx<double>;
  TruncationPolicy pol;

  // termination wins over the |z| >= 1 divergence rule
  auto r = humbert::pfq<double>({{C(-2), C(1)}, {C(-3)}}, C(1), pol);
  CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.converged);
  CHECK(r.terms_used == 3);

  // upper parameter 0 makes every later term vanish
  auto one = humbert::pfq<double>({{C(0), C(5), C(7)}, {C(2), C(3)}}, C(9), pol);
  CHECK(one.value == C(1));
  CHECK(one.terms_used == 1);

  // polynomial case evaluated far outside the unit disc
  // 2F0[-2, b;; z] = 1 - 2bz + b(b+1)z^2
  const double b = 0.7, z = 5.0;
  auto p2 = humbert::pfq<double>({{C(-2), C(b)}, {}}, C(z), pol);
  CHECK(p2.value.real() ==
        doctest::Approx(1 - 2 * b * z + b * (b + 1) * z * z).epsilon(1e-15));
}

TEST_CASE_TEMPLATE("terminating unit-argument sums", Real, double,
                   long double) {
  using C = cplx<Real>;

  auto v = humbert::f3f2_unity_terminating<Real>(
      {{C(-2), C(1), C(Real(0.5))}, {C(2), C(3)}});
  CHECK(rel_err(v, refvals::f32_term) < Real(1e-14));

  // must agree with the generic engine on the same input
  TruncationPolicy pol;
  auto generic =
      humbert::pfq<Real>({{C(-2), C(1), C(Real(0.5))}, {C(2), C(3)}}, C(1), pol);
  CHECK(std::abs(v - generic.value) < Real(1e-16) * std::abs(v));

  // closed forms: j = 0 gives exactly 1, j = 1 gives 1 - bg/(de)
  auto u0 = humbert::f3f2_unity_terminating<Real>(
      {{C(0), C(4), C(9)}, {C(2), C(5)}});
  CHECK(u0 == C(1));

  const Real bb = Real(0.7), gg = Real(1.3), dd = Real(0.4), ee = Real(2.2);
  auto u1 = humbert::f3f2_unity_terminating<Real>(
      {{C(-1), C(bb), C(gg)}, {C(dd), C(ee)}});
  CHECK(std::abs(u1.real() - (1 - bb * gg / (dd * ee))) < Real(1e-14));

  CHECK_THROWS_AS(humbert::f3f2_unity_terminating<Real>(
                      {{C(1), C(2), C(Real(0.5))}, {C(2), C(3)}}),
                  humbert::domain_error);
  CHECK_THROWS_AS(humbert::f3f2_unity_terminating<Real>(
                      {{C(-3), C(1), C(1)}, {C(-1), C(2)}}),
                  humbert::pole_error);
}

TEST_CASE_TEMPLATE("pfq transformation identities", Real, double,
                   long double) {
  using C = cplx<Real>;
  TruncationPolicy pol;
  pol.rel_tol = 1e-15;
  const C h(Real(0.5)), t(Real(1) / 3), q(Real(0.25));

  // Kummer reflection: 1F1[a;c;z] = e^z 1F1[c-a;c;-z]
  auto lhs = humbert::pfq<Real>({{C(1)}, {q}}, C(2), pol);
  auto rhs = humbert::pfq<Real>({{q - C(1)}, {q}}, C(-2), pol);
  CHECK(rel_err(lhs.value, std::exp(C(2)) * rhs.value) < Real(1e-13));

  // Euler reflection of the Gauss series at z = 1/2
  auto g1 = humbert::pfq<Real>({{C(1), h}, {t}}, C(Real(0.5)), pol);
  auto g2 = humbert::pfq<Real>({{t - C(1), t - h}, {t}}, C(Real(0.5)), pol);
  C pref = humbert::cpow(C(Real(0.5)), t - C(1) - h);
  CHECK(rel_err(g1.value, pref * g2.value) < Real(1e-12));
}

TEST_CASE("pfq truncation policy handling") {
  using C = cplx<double>;
  const C h(0.5), t(1.0 / 3), q(0.25);

  TruncationPolicy tight;
  tight.max_terms = 5;
  CHECK_THROWS_AS(humbert::pfq<double>({{C(1), h}, {t, q}}, C(-15), tight),
                  humbert::convergence_error);

  TruncationPolicy bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(humbert::pfq<double>({{C(1)}, {q}}, C(1), bad),
                  humbert::domain_error);
  bad.rel_tol = 1e-12;
  bad.stagnation_window = 1;
  CHECK_THROWS_AS(humbert::pfq<double>({{C(1)}, {q}}, C(1), bad),
                  humbert::domain_error);

  // error estimate brackets the true error
  TruncationPolicy pol;
  pol.rel_tol = 1e-15;
  auto r = humbert::pfq<double>({{C(1), h}, {t, q}}, C(-2), pol);
  cplx<long double> exact = refvals::f22_1_h_t_q_m2;
  long double true_err =
      std::abs(cplx<long double>(r.value.real(), r.value.imag()) - exact);
  CHECK(static_cast<long double>(r.err_estimate) >= true_err);
  CHECK(r.err_estimate < 1e-9 * std::abs(r.value));
}

TEST_CASE_TEMPLATE("double series base points", Real, double, long double) {
  using C = cplx<Real>;
  const Psi1Params<Real> par{C(1), C(Real(0.5)), C(Real(1) / 3), C(Real(0.25))};
  TruncationPolicy pol;
  pol.rel_tol = 1e-14;

  auto origin = humbert::psi1_double_series(par, C(0), C(0), pol);
  CHECK(origin.value == C(1));
  CHECK(origin.converged);
  CHECK(origin.method == "double_series");

  // x = 0 reduces to the confluent series in y
  auto atx0 = humbert::psi1_double_series(par, C(0), C(2), pol);
  CHECK(rel_err(atx0.value, refvals::f11_1_q_2) < Real(1e-13));

  // y = 0 reduces to the Gauss series in x
  auto aty0 = humbert::psi1_double_series(par, C(Real(0.5)), C(0), pol);
  CHECK(rel_err(aty0.value, refvals::f21_1_h_t_05) < Real(1e-12));

  // b = 0 removes the x dependence entirely
  const Psi1Params<Real> pb0{C(1), C(0), C(Real(1) / 3), C(Real(0.25))};
  auto b0pos = humbert::psi1_double_series(pb0, C(Real(0.77)), C(2), pol);
  CHECK(rel_err(b0pos.value, refvals::f11_1_q_2) < Real(1e-12));
  auto b0neg = humbert::psi1_double_series(pb0, C(Real(-0.5)), C(2), pol);
  CHECK(rel_err(b0neg.value, refvals::f11_1_q_2) < Real(1e-12));
}

TEST_CASE_TEMPLATE("double series frozen oracle values", Real, double,
                   long double) {
  using C = cplx<Real>;
  const Psi1Params<Real> par{C(1), C(Real(0.5)), C(Real(1) / 3), C(Real(0.25))};
  TruncationPolicy pol;
  pol.rel_tol = 1e-14;
  Real tol = std::is_same_v<Real, double> ? Real(3e-13) : Real(1e-15);

  auto r1 = humbert::psi1_double_series(par, C(Real(0.3)), C(Real(0.7)), pol);
  CHECK(rel_err(r1.value, refvals::psi1_03_07) < tol);
  CHECK(static_cast<long double>(r1.err_estimate) >=
        std::abs(cplx<long double>(r1.value.real(), r1.value.imag()) -
                 refvals::psi1_03_07));

  // rows bulge to ~2e6 times the final sum here before cancelling, so the
  // achievable accuracy is the roundoff floor eps * max_row / |sum|
  Real tol_bulge = std::is_same_v<Real, double> ? Real(2e-8) : Real(5e-12);
  auto r2 = humbert::psi1_double_series(par, C(Real(0.5)), C(-5), pol);
  CHECK(rel_err(r2.value, refvals::psi1_05_m5) < tol_bulge);

  // reflected-argument branch, moderate and strong
  auto r3 = humbert::psi1_double_series(par, C(Real(-0.6)), C(Real(1.1)), pol);
  CHECK(rel_err(r3.value, refvals::psi1_m06_11) < tol);

  auto r4 = humbert::psi1_double_series(par, C(Real(-0.85)), C(Real(2.5)), pol);
  CHECK(rel_err(r4.value, refvals::psi1_m085_25) < Real(1e-12));

  const Psi1Params<Real> pc{C(Real(1.3), Real(0.4)), C(Real(0.7), Real(-0.2)),
                            C(Real(1.1), Real(0.3)), C(Real(0.9), Real(-0.1))};
  auto r5 = humbert::psi1_double_series(pc, C(Real(0.25), Real(0.1)),
                                        C(Real(-0.4), Real(0.3)), pol);
  CHECK(rel_err(r5.value, refvals::psi1_cplx_params) < tol);
}

TEST_CASE_TEMPLATE("double series argument reflection is seamless", Real,
                   double, long double) {
  // the transformation x -> x/(x-1), y -> y/(1-x), b -> c-b with prefactor
  // (1-x)^{-a} maps a reflected-branch point onto a direct-branch point,
  // so it cross-checks the two inner summation routes against each other
  using C = cplx<Real>;
  TruncationPolicy pol;
  pol.rel_tol = 1e-14;

  auto check_pair = [&](const Psi1Params<Real>& par, C x, C y, Real tol) {
    C xi = x / (x - C(1));
    C yi = y / (C(1) - x);
    const Psi1Params<Real> pim{par.a, par.c - par.b, par.c, par.cp};
    auto direct = humbert::psi1_double_series(par, x, y, pol);
    auto image = humbert::psi1_double_series(pim, xi, yi, pol);
    C mapped = humbert::cpow(C(1) - x, -par.a) * image.value;
    CHECK(rel_err(direct.value, mapped) < tol);
  };

  const Psi1Params<Real> par{C(1), C(Real(0.5)), C(Real(1) / 3), C(Real(0.25))};
  check_pair(par, C(Real(-0.6)), C(Real(1.1)), Real(1e-12));
  check_pair(par, C(Real(-0.85)), C(Real(2.5)), Real(1e-11));
  check_pair(par, C(Real(-0.3), Real(0.55)), C(Real(0.8), Real(-0.6)),
             Real(1e-11));
}

TEST_CASE("double series domain and policy errors") {
  using C = cplx<double>;
  const Psi1Params<double> par{C(1), C(0.5), C(1.0 / 3), C(0.25)};
  TruncationPolicy pol;

  CHECK_THROWS_AS(humbert::psi1_double_series(par, C(1), C(0.5), pol),
                  humbert::domain_error);
  CHECK_THROWS_AS(humbert::psi1_double_series(par, C(-1), C(0.5), pol),
                  humbert::domain_error);
  CHECK_THROWS_AS(humbert::psi1_double_series(par, C(0.8, 0.61), C(0), pol),
                  humbert::domain_error);

  TruncationPolicy tight;
  tight.max_terms = 8;
  CHECK_THROWS_AS(humbert::psi1_double_series(par, C(0.5), C(-5), tight),
                  humbert::convergence_error);

  // c at a non-positive integer is rejected up front
  const Psi1Params<double> bad{C(1), C(0.5), C(-2), C(0.25)};
  CHECK_THROWS_AS(humbert::psi1_double_series(bad, C(0.1), C(0.1), pol),
                  humbert::pole_error);
}

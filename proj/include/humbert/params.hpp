// Parameter and evaluation-point records for the two-variable function
// Psi1[a, b; c, cp](x, y), shared by the series engines, the evaluators,
// and the asymptotic expansions.
#pragma once

#include "humbert/scalar.hpp"

namespace humbert {

template <class Real>
struct Psi1Params {
  cplx<Real> a{}, b{}, c{}, cp{};

  // definition of the function requires both lower parameters off the
  // gamma poles
  void validate() const {
    if (is_nonpos_int(c))
      throw pole_error("Psi1Params: c is a non-positive integer");
    if (is_nonpos_int(cp))
      throw pole_error("Psi1Params: cp is a non-positive integer");
  }

  // hypothesis flags, computed from the fields
  bool outer_series_ok() const {  // a-b, a-c off the integers
    return !is_int(a - b) && !is_int(a - c);
  }
  bool general_asym_ok() const {  // additionally b-c off the integers
    return outer_series_ok() && !is_int(b - c);
  }
  bool laplace_ok() const { return a.real() > 0; }
};

enum class Region { unit_disc, outer, boundary, kummer_image };

inline const char* region_name(Region r) {
  switch (r) {
    case Region::unit_disc: return "unit_disc";
    case Region::outer: return "outer";
    case Region::boundary: return "boundary";
    case Region::kummer_image: return "kummer_image";
  }
  return "?";
}

template <class Real>
struct EvalPoint {
  cplx<Real> x{}, y{};
  Region region = Region::boundary;
};

// The function's domain excludes the ray x in [1, oo) (x != 1 and
// |arg(1-x)| < pi).
template <class Real>
bool in_psi1_domain(const cplx<Real>& x) {
  return !(x.imag() == Real(0) && x.real() >= Real(1));
}

template <class Real>
EvalPoint<Real> make_point(const cplx<Real>& x, const cplx<Real>& y) {
  if (!in_psi1_domain(x))
    throw domain_error("point outside Psi1 domain: x on the ray [1, oo)");
  EvalPoint<Real> pt{x, y, Region::boundary};
  if (std::abs(x) < Real(1))
    pt.region = Region::unit_disc;
  else if (std::abs(x - cplx<Real>(1)) > Real(1))
    pt.region = Region::outer;
  return pt;
}

}  // namespace humbert

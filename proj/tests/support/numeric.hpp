#pragma once

// Floating-point images of the exact scalar types, used as an independent
// cross-check in tests: identities established exactly must also hold
// numerically at sample points computed with nothing but std::complex.

#include <cmath>
#include <complex>
#include <numbers>

#include "yhdn/cyclotomic.hpp"
#include "yhdn/laurent.hpp"
#include "yhdn/ratfun.hpp"
#include "yhdn/rational.hpp"

namespace yhdn::testing {

using cplx = std::complex<double>;

inline cplx unit_root(unsigned L, long k) {
  const double ang =
      2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(L);
  return {std::cos(ang), std::sin(ang)};
}

inline cplx approx(const Rational& r) { return {r.to_double(), 0.0}; }

inline cplx approx(const Cyclotomic& c) {
  const cplx z = unit_root(c.order(), 1);
  cplx sum = 0.0;
  cplx zk = 1.0;
  for (const Rational& coef : c.coeffs()) {
    sum += approx(coef) * zk;
    zk *= z;
  }
  return sum;
}

inline cplx approx(const Laurent& f, cplx q) {
  cplx sum = 0.0;
  for (const auto& [e, coef] : f.terms())
    sum += approx(coef) * std::pow(q, static_cast<double>(e));
  return sum;
}

inline cplx approx(const RatFun& f, cplx q) {
  return approx(f.num(), q) / approx(f.den(), q);
}

inline bool close(cplx a, cplx b, double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}

}  // namespace yhdn::testing

#pragma once

// Exact cyclotomic numbers: elements of Q(zeta_L) stored as the unique reduced
// residue mod Phi_L (dense coefficient vector of length deg Phi_L, low to high).
//
// Design notes:
//   - Mixed-order arithmetic embeds both operands into Q(zeta_lcm) first.
//   - Constant residues are normalized down to order 1, so plain rationals stay
//     cheap; no deeper subfield descent is attempted.
//   - Phi_L is computed by the recursive division of x^L - 1 by the lower-order
//     cyclotomic polynomials and cached.

#include <string>
#include <vector>

#include "yhdn/rational.hpp"

namespace yhdn {

// Monic coefficients of Phi_L, size deg(Phi_L) + 1, constant term first.
const std::vector<Rational>& cyclotomic_poly(unsigned L);

class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r) : order_(1), c_{r} {}  // NOLINT: implicit by design
  Cyclotomic(long n) : order_(1), c_{Rational(n)} {}   // NOLINT: implicit by design

  // zeta_L^k (k may be negative).
  static Cyclotomic root(unsigned L, long k);
  // Reduces an arbitrary-degree polynomial in zeta_L.
  static Cyclotomic reduce(unsigned L, std::vector<Rational> poly);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return order_ == 1 && !c_.empty() && c_[0].is_one(); }
  bool is_rational() const { return order_ == 1; }
  const Rational& as_rational() const;  // pre: is_rational()

  // Image under Q(zeta_L) -> Q(zeta_M), zeta_L -> zeta_M^(M/L); pre: order | M.
  Cyclotomic embedded(unsigned M) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  Cyclotomic inverse() const;  // DivideByZero on zero
  Cyclotomic pow(long e) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // "z{L}" denotes zeta_L, e.g. "1/2 + z3^2"; rationals print plainly.
  std::string str() const;

 private:
  Cyclotomic(unsigned order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
  void normalize();

  unsigned order_;
  std::vector<Rational> c_;
};

}  // namespace yhdn

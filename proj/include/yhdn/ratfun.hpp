#pragma once

// Rational functions in q over the cyclotomics, kept in canonical form:
// den is an ordinary polynomial (min exponent 0) with nonzero constant term
// and leading coefficient 1, and gcd(num, den) is a unit. Canonical form makes
// structural equality coincide with field equality.

#include <string>

#include "yhdn/laurent.hpp"

namespace yhdn {

class RatFun {
 public:
  RatFun() : den_(Rational(1)) {}
  RatFun(long n) : num_(n), den_(Rational(1)) {}               // NOLINT
  RatFun(const Rational& r) : num_(r), den_(Rational(1)) {}    // NOLINT
  RatFun(const Cyclotomic& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFun(const Laurent& n) : num_(n), den_(Rational(1)) {}     // NOLINT
  RatFun(Laurent num, Laurent den);                            // canonicalizes

  static RatFun q_power(int k) { return RatFun(Laurent::q_power(k)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  unsigned order() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  const Laurent& as_laurent() const;  // pre: is_laurent()

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  RatFun inverse() const;  // DivideByZero on zero
  RatFun pow(int e) const;

  Cyclotomic evaluate(const Cyclotomic& qbar) const;  // PoleAtSpecialization

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string str() const;

 private:
  void canonicalize(bool coprime);  // coprime = true skips the gcd pass

  Laurent num_, den_;
};

}  // namespace yhdn

#pragma once

// Laurent polynomials in q with cyclotomic coefficients: a finite map
// exponent -> coefficient with no zero coefficients stored.
//
// The polynomial's order() is the lcm of its coefficients' cyclotomic orders;
// rational coefficients sit at order 1 and are inflated only at serialization
// or comparison time. gcd/divmod helpers treat a Laurent polynomial as
// q^min_exp times an ordinary polynomial with nonzero constant term.

#include <map>
#include <string>
#include <vector>

#include "yhdn/cyclotomic.hpp"

namespace yhdn {

class Laurent {
 public:
  Laurent() = default;  // zero
  Laurent(const Rational& r) { *this = Laurent(Cyclotomic(r)); }  // NOLINT
  Laurent(long n) { *this = Laurent(Cyclotomic(n)); }             // NOLINT
  Laurent(const Cyclotomic& c);                                   // NOLINT: constant

  static Laurent q_power(int k);  // q^k
  static Laurent monomial(int k, const Cyclotomic& c);

  unsigned order() const { return order_; }
  const std::map<int, Cyclotomic>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return t_.size() == 1; }

  int min_exp() const;  // pre: nonzero
  int max_exp() const;  // pre: nonzero
  Cyclotomic coeff(int k) const;
  Cyclotomic leading_coeff() const;  // coefficient of max_exp
  Cyclotomic constant_coeff() const { return coeff(0); }

  Laurent shifted(int k) const;  // * q^k

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }

  Laurent pow(unsigned e) const;
  Laurent scaled(const Cyclotomic& c) const;

  // Substitutes q -> qbar; qbar must be nonzero (q is a unit).
  Cyclotomic evaluate(const Cyclotomic& qbar) const;

  friend bool operator==(const Laurent& a, const Laurent& b);
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Descending exponents, e.g. "q^2 - 2 + q^-2"; non-rational coefficients
  // parenthesized as "(1 + z3)*q^2".
  std::string str() const;

 private:
  void normalize();

  unsigned order_ = 1;
  std::map<int, Cyclotomic> t_;
};

// Monic gcd of the ordinary parts of a and b (q-power factors are units and
// are discarded). gcd(0, b) is the monicized ordinary part of b.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

// Quotient of ordinary polynomials (min_exp >= 0); remainder stored in *rem
// when rem is non-null, required to vanish otherwise.
Laurent poly_divmod(const Laurent& a, const Laurent& b, Laurent* rem);

}  // namespace yhdn

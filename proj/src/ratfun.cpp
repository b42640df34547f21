#include "yhdn/ratfun.hpp"

#include <numeric>
#include <utility>

#include "yhdn/errors.hpp"

namespace yhdn {

RatFun::RatFun(Laurent num, Laurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize(false);
}

void RatFun::canonicalize(bool coprime) {
  if (den_.is_zero()) throw DivideByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(Rational(1));
    return;
  }
  // q-powers are units: push them all into the numerator.
  const int a = num_.min_exp();
  const int b = den_.min_exp();
  Laurent n = num_.shifted(-a);
  Laurent d = den_.shifted(-b);
  if (!coprime && !d.is_one()) {
    const Laurent g = laurent_gcd(n, d);
    if (!g.is_one()) {
      n = poly_divmod(n, g, nullptr);
      d = poly_divmod(d, g, nullptr);
    }
  }
  const Cyclotomic lc = d.leading_coeff();
  if (!lc.is_one()) {
    const Cyclotomic inv = lc.inverse();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = n.shifted(a - b);
  den_ = std::move(d);
}

unsigned RatFun::order() const {
  return std::lcm(num_.order(), den_.order());
}

const Laurent& RatFun::as_laurent() const {
  if (!is_laurent())
    throw InternalInconsistency("rational function has a nontrivial denominator");
  return num_;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize(false);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFun();
  // Cross-cancel before multiplying: both operands are canonical, so after
  // reducing num against the other den the four factors are pairwise coprime.
  const RatFun a(num_, o.den_);
  const RatFun b(o.num_, den_);
  num_ = a.num_ * b.num_;
  den_ = a.den_ * b.den_;
  canonicalize(true);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivideByZero("inverse of zero rational function");
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  r.canonicalize(true);
  return r;
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun acc(1);
  RatFun base = *this;
  unsigned k = static_cast<unsigned>(e);
  while (k != 0) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Cyclotomic RatFun::evaluate(const Cyclotomic& qbar) const {
  const Cyclotomic d = den_.evaluate(qbar);
  if (d.is_zero())
    throw PoleAtSpecialization("denominator vanishes at the chosen root of unity");
  return num_.evaluate(qbar) / d;
}

std::string RatFun::str() const {
  if (is_laurent()) return num_.str();
  const auto wrap = [](const Laurent& f) {
    const std::string s = f.str();
    return f.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace yhdn

#include "yhdn/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace yhdn {

namespace {

using Poly = std::vector<Rational>;  // dense, constant term first

void strip(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  strip(r);
  return r;
}

// Long division over Q: returns the quotient, leaves the remainder in a.
Poly divmod(Poly& a, const Poly& b) {
  strip(a);
  if (b.empty()) throw DivideByZero("polynomial division by zero");
  Poly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    size_t k = a.size() - b.size();
    Rational f = a.back() / lead;
    q[k] = f;
    for (size_t j = 0; j + 1 < b.size(); ++j) a[k + j] -= f * b[j];
    a.pop_back();  // leading term cancels exactly
    strip(a);
    if (a.empty()) break;
  }
  strip(q);
  return q;
}

// Requires every proper divisor of L already in cache.
Poly compute_phi(unsigned L, const std::map<unsigned, Poly>& cache) {
  Poly p(L + 1, Rational(0));
  p[0] = Rational(-1);
  p[L] = Rational(1);
  for (unsigned m = 1; m < L; ++m) {
    if (L % m != 0) continue;
    Poly rem = std::move(p);
    p = divmod(rem, cache.at(m));
    if (!rem.empty())
      throw InternalInconsistency("cyclotomic polynomial division left a remainder");
  }
  return p;
}

}  // namespace

const std::vector<Rational>& cyclotomic_poly(unsigned L) {
  if (L < 1) throw BadParameters("cyclotomic order must be >= 1");
  static std::map<unsigned, Poly> cache;  // nodes are stable; guarded by mu
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(L);
  if (it == cache.end()) {
    for (unsigned m = 1; m <= L; ++m)
      if (L % m == 0 && cache.find(m) == cache.end()) cache.emplace(m, compute_phi(m, cache));
    it = cache.find(L);
  }
  return it->second;
}

void Cyclotomic::normalize() {
  const size_t deg = cyclotomic_poly(order_).size() - 1;
  c_.resize(deg, Rational(0));
  bool constant = true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) {
      constant = false;
      break;
    }
  if (constant && order_ != 1) {
    c_.resize(1);
    order_ = 1;
  }
}

Cyclotomic Cyclotomic::root(unsigned L, long k) {
  if (L < 1) throw BadParameters("cyclotomic order must be >= 1");
  long r = k % static_cast<long>(L);
  if (r < 0) r += static_cast<long>(L);
  std::vector<Rational> p(static_cast<size_t>(r) + 1, Rational(0));
  p[static_cast<size_t>(r)] = Rational(1);
  return reduce(L, std::move(p));
}

Cyclotomic Cyclotomic::reduce(unsigned L, std::vector<Rational> poly) {
  const Poly& phi = cyclotomic_poly(L);
  divmod(poly, phi);  // keep the remainder
  Cyclotomic x(L, std::move(poly));
  x.normalize();
  return x;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

const Rational& Cyclotomic::as_rational() const {
  if (order_ != 1) throw InternalInconsistency("cyclotomic number is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned M) const {
  if (M == order_) return *this;
  if (M % order_ != 0) throw BadParameters("embedding target order not a multiple");
  const unsigned step = M / order_;
  std::vector<Rational> p((c_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  const Poly& phi = cyclotomic_poly(M);
  divmod(p, phi);
  p.resize(phi.size() - 1, Rational(0));
  return Cyclotomic(M, std::move(p));  // no descent: caller asked for order M
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  unsigned M = std::lcm(order_, o.order_);
  Cyclotomic a = embedded(M), b = o.embedded(M);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.normalize();
  return *this = a;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  unsigned M = std::lcm(order_, o.order_);
  Cyclotomic a = embedded(M), b = o.embedded(M);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  a.normalize();
  return *this = a;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  unsigned M = std::lcm(order_, o.order_);
  Cyclotomic a = embedded(M), b = o.embedded(M);
  Poly prod = mul(a.c_, b.c_);
  return *this = reduce(M, std::move(prod));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivideByZero("inverse of zero cyclotomic number");
  if (order_ == 1) return Cyclotomic(c_[0].inverse());
  // Extended Euclid over Q[x]: u*a + v*Phi = g with g a nonzero constant,
  // since Phi_L is irreducible and the residue a is nonzero.
  Poly r0 = cyclotomic_poly(order_), r1 = c_;
  strip(r1);
  Poly u0{}, u1{Rational(1)};  // cofactors of the residue only
  while (r1.size() > 1) {
    Poly r = r0;
    Poly q = divmod(r, r1);
    Poly qu = mul(q, u1);
    Poly nu = u0;
    nu.resize(std::max(nu.size(), qu.size()), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
    strip(nu);
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(nu);
  }
  if (r1.empty()) throw InternalInconsistency("cyclotomic residue shares a factor with Phi");
  const Rational g = r1[0];
  for (auto& x : u1) x /= g;
  return reduce(order_, std::move(u1));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, acc = Cyclotomic(Rational(1));
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1UL) acc *= base;
    base *= base;
    k >>= 1UL;
  }
  return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned M = std::lcm(a.order_, b.order_);
  Cyclotomic x = a.embedded(M), y = b.embedded(M);
  return x.c_ == y.c_;
}

std::string Cyclotomic::str() const {
  if (order_ == 1) return c_[0].str();
  std::string z = "z" + std::to_string(order_);
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].str();
    std::string term;
    if (i == 0) {
      term = coeff;
    } else {
      std::string power = (i == 1) ? z : z + "^" + std::to_string(i);
      if (coeff == "1")
        term = power;
      else if (coeff == "-1")
        term = "-" + power;
      else
        term = coeff + "*" + power;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace yhdn

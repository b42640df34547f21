#include "yhdn/laurent.hpp"

#include <numeric>

namespace yhdn {

Laurent::Laurent(const Cyclotomic& c) {
  if (!c.is_zero()) t_.emplace(0, c);
  normalize();
}

Laurent Laurent::q_power(int k) {
  Laurent r;
  r.t_.emplace(k, Cyclotomic(Rational(1)));
  return r;
}

Laurent Laurent::monomial(int k, const Cyclotomic& c) {
  Laurent r;
  if (!c.is_zero()) r.t_.emplace(k, c);
  r.normalize();
  return r;
}

void Laurent::normalize() {
  for (auto it = t_.begin(); it != t_.end();) {
    if (it->second.is_zero())
      it = t_.erase(it);
    else
      ++it;
  }
  order_ = 1;
  for (const auto& [e, c] : t_) order_ = std::lcm(order_, c.order());
}

bool Laurent::is_one() const {
  return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == Cyclotomic(Rational(1));
}

bool Laurent::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
}

int Laurent::min_exp() const {
  if (t_.empty()) throw InternalInconsistency("min_exp of zero polynomial");
  return t_.begin()->first;
}

int Laurent::max_exp() const {
  if (t_.empty()) throw InternalInconsistency("max_exp of zero polynomial");
  return t_.rbegin()->first;
}

Cyclotomic Laurent::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Cyclotomic() : it->second;
}

Cyclotomic Laurent::leading_coeff() const { return t_.empty() ? Cyclotomic() : t_.rbegin()->second; }

Laurent Laurent::shifted(int k) const {
  Laurent r;
  r.order_ = order_;
  for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, inserted] = t_.emplace(e, -c);
    if (!inserted) it->second -= c;
  }
  normalize();
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  std::map<int, Cyclotomic> r;
  for (const auto& [e1, c1] : t_) {
    for (const auto& [e2, c2] : o.t_) {
      Cyclotomic p = c1 * c2;
      if (p.is_zero()) continue;
      auto [it, inserted] = r.emplace(e1 + e2, p);
      if (!inserted) it->second += p;
    }
  }
  t_ = std::move(r);
  normalize();
  return *this;
}

Laurent Laurent::pow(unsigned e) const {
  Laurent acc(Rational(1)), base = *this;
  while (e) {
    if (e & 1U) acc *= base;
    base *= base;
    e >>= 1U;
  }
  return acc;
}

Laurent Laurent::scaled(const Cyclotomic& c) const {
  Laurent r;
  for (const auto& [e, x] : t_) {
    Cyclotomic p = x * c;
    if (!p.is_zero()) r.t_.emplace(e, p);
  }
  r.normalize();
  return r;
}

Cyclotomic Laurent::evaluate(const Cyclotomic& qbar) const {
  if (qbar.is_zero()) throw DivideByZero("q must specialize to a nonzero value");
  Cyclotomic acc;
  for (const auto& [e, c] : t_) acc += c * qbar.pow(e);
  return acc;
}

bool operator==(const Laurent& a, const Laurent& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  for (; ia != a.t_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const int e = it->first;
    const Cyclotomic& c = it->second;
    std::string cs = c.str();
    bool negative = false;
    if (c.is_rational() && c.as_rational().sign() < 0) {
      negative = true;
      cs = (-c).str();
    }
    std::string qpart;
    if (e == 1)
      qpart = "q";
    else if (e != 0)
      qpart = "q^" + std::to_string(e);
    std::string term;
    if (qpart.empty())
      term = c.is_rational() ? cs : "(" + cs + ")";
    else if (cs == "1")
      term = qpart;
    else if (c.is_rational())
      term = cs + "*" + qpart;
    else
      term = "(" + cs + ")*" + qpart;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

namespace {

// Dense coefficients of an ordinary polynomial (min_exp >= 0 required).
std::vector<Cyclotomic> to_dense(const Laurent& a) {
  if (a.is_zero()) return {};
  if (a.min_exp() < 0) throw InternalInconsistency("negative exponent in ordinary polynomial");
  std::vector<Cyclotomic> v(static_cast<size_t>(a.max_exp()) + 1);
  for (const auto& [e, c] : a.terms()) v[static_cast<size_t>(e)] = c;
  return v;
}

void dense_strip(std::vector<Cyclotomic>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Laurent from_dense(const std::vector<Cyclotomic>& v) {
  Laurent r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r += Laurent::monomial(static_cast<int>(i), v[i]);
  return r;
}

// Remainder of a by b in place; both dense, b nonzero.
void dense_mod(std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
               std::vector<Cyclotomic>* quot) {
  const Cyclotomic lead_inv = b.back().inverse();
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Cyclotomic());
  while (a.size() >= b.size() && !a.empty()) {
    size_t k = a.size() - b.size();
    Cyclotomic f = a.back() * lead_inv;
    if (quot) (*quot)[k] = f;
    for (size_t j = 0; j + 1 < b.size(); ++j) a[k + j] -= f * b[j];
    a.pop_back();
    dense_strip(a);
  }
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  auto ordinary = [](const Laurent& x) {
    return x.is_zero() ? std::vector<Cyclotomic>{} : to_dense(x.shifted(-x.min_exp()));
  };
  std::vector<Cyclotomic> r0 = ordinary(a), r1 = ordinary(b);
  while (!r1.empty()) {
    dense_mod(r0, r1, nullptr);
    std::swap(r0, r1);
  }
  if (r0.empty()) return Laurent();
  const Cyclotomic lead_inv = r0.back().inverse();
  for (auto& c : r0) c *= lead_inv;
  return from_dense(r0);
}

Laurent poly_divmod(const Laurent& a, const Laurent& b, Laurent* rem) {
  if (b.is_zero()) throw DivideByZero("polynomial division by zero");
  std::vector<Cyclotomic> da = to_dense(a), db = to_dense(b), quot;
  dense_strip(da);
  dense_strip(db);
  dense_mod(da, db, &quot);
  Laurent r = from_dense(da);
  if (rem)
    *rem = r;
  else if (!r.is_zero())
    throw InternalInconsistency("polynomial division expected to be exact");
  return from_dense(quot);
}

}  // namespace yhdn

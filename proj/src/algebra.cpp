#include "yhdn/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "yhdn/errors.hpp"

namespace yhdn {

namespace {

void require_ambient(int d, int n) {
  if (d < 1) throw BadParameters("d must be positive");
  if (n < 0) throw BadParameters("n must be nonnegative");
}

// (q - q^{-1}) / d, the scalar attached to every quadratic-relation split
Laurent split_scalar(int d) {
  return (Laurent::q_power(1) - Laurent::q_power(-1))
      .scaled(Cyclotomic(Rational(1, d)));
}

int mod_d(int v, int d) { return ((v % d) + d) % d; }

}  // namespace

BasisWord::BasisWord(std::vector<int> f, Perm p)
    : framing(std::move(f)), perm(std::move(p)) {
  if (static_cast<int>(framing.size()) != perm.n())
    throw BadParameters("framing length differs from permutation size");
}

BasisWord BasisWord::identity(int n) {
  return BasisWord(std::vector<int>(static_cast<size_t>(n), 0), Perm(n));
}

bool BasisWord::is_identity() const {
  return perm.is_identity() &&
         std::all_of(framing.begin(), framing.end(), [](int k) { return k == 0; });
}

std::string BasisWord::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t j = 0; j < framing.size(); ++j) {
    if (framing[j] == 0) continue;
    if (any) os << ' ';
    os << 't' << j + 1;
    if (framing[j] != 1) os << '^' << framing[j];
    any = true;
  }
  if (!perm.is_identity()) {
    if (any) os << ' ';
    os << 'g' << perm.str();
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

AlgebraElement::AlgebraElement(int d, int n) : d_(d), n_(n) {
  require_ambient(d, n);
}

AlgebraElement AlgebraElement::one(int d, int n) {
  return from_word(d, n, BasisWord::identity(n));
}

AlgebraElement AlgebraElement::from_word(int d, int n, const BasisWord& w) {
  AlgebraElement out(d, n);
  out.add_term(w, RatFun(1));
  return out;
}

RatFun AlgebraElement::coeff(const BasisWord& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? RatFun() : it->second;
}

void AlgebraElement::check_word(const BasisWord& w) const {
  if (w.perm.n() != n_) throw AmbientMismatch("word lives on a different strand count");
  for (int k : w.framing)
    if (k < 0 || k >= d_)
      throw AmbientMismatch("framing exponent is not reduced mod d");
}

AlgebraElement& AlgebraElement::add_term(const BasisWord& w, const RatFun& c) {
  check_word(w);
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(d_, n_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.d_ != d_ || o.n_ != n_)
    throw AmbientMismatch("adding elements of different algebras");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  return *this += -o;
}

AlgebraElement AlgebraElement::scaled(const RatFun& c) const {
  AlgebraElement out(d_, n_);
  if (c.is_zero()) return out;
  for (const auto& [w, coef] : terms_) {
    const RatFun prod = coef * c;
    if (!prod.is_zero()) out.terms_.emplace(w, prod);
  }
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one()) {
      os << w.str();
      continue;
    }
    const std::string cs = c.str();
    const bool needs_parens =
        cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    os << (needs_parens ? "(" + cs + ")" : cs);
    if (!w.is_identity()) os << '*' << w.str();
  }
  return os.str();
}

AlgebraElement gen_t(int d, int n, int j) {
  require_ambient(d, n);
  if (j < 1 || j > n) throw BadIndex("t index out of range");
  std::vector<int> f(static_cast<size_t>(n), 0);
  f[static_cast<size_t>(j - 1)] = 1 % d;
  return AlgebraElement::from_word(d, n, BasisWord(std::move(f), Perm(n)));
}

AlgebraElement gen_g(int d, int n, int i) {
  require_ambient(d, n);
  if (i < 1 || i > n - 1) throw BadIndex("g index out of range");
  return AlgebraElement::from_word(
      d, n,
      BasisWord(std::vector<int>(static_cast<size_t>(n), 0),
                Perm::adjacent_transposition(n, i - 1)));
}

AlgebraElement gen_g_inverse(int d, int n, int i) {
  // g^{-1} = g - (q - q^{-1}) e_i
  AlgebraElement out = gen_g(d, n, i);
  out += gen_e(d, n, i).scaled(
      -RatFun(Laurent::q_power(1) - Laurent::q_power(-1)));
  return out;
}

AlgebraElement gen_e(int d, int n, int i) {
  if (i < 1 || i > n - 1) throw BadIndex("e index out of range");
  return gen_e_pair(d, n, i, i + 1);
}

AlgebraElement gen_e_pair(int d, int n, int i, int k) {
  require_ambient(d, n);
  if (i < 1 || i > n || k < 1 || k > n) throw BadIndex("e indices out of range");
  if (i == k) return AlgebraElement::one(d, n);
  AlgebraElement out(d, n);
  const RatFun inv_d{Rational(1, d)};
  for (int s = 0; s < d; ++s) {
    std::vector<int> f(static_cast<size_t>(n), 0);
    f[static_cast<size_t>(i - 1)] = s;
    f[static_cast<size_t>(k - 1)] = mod_d(-s, d);
    out.add_term(BasisWord(std::move(f), Perm(n)), inv_d);
  }
  return out;
}

std::map<BasisWord, Laurent> word_product(int d, int n, const BasisWord& a,
                                          const BasisWord& b) {
  // slide b's framing through a's permutation: g_w t_j = t_{w(j)} g_w
  std::vector<int> f = a.framing;
  for (int j = 0; j < n; ++j) {
    const int image = a.perm(j);
    f[static_cast<size_t>(image)] =
        mod_d(f[static_cast<size_t>(image)] + b.framing[static_cast<size_t>(j)], d);
  }

  const Laurent split = split_scalar(d);
  std::map<BasisWord, Laurent> state;
  state.emplace(BasisWord(std::move(f), a.perm), Laurent(1));

  for (const int letter : b.perm.reduced_word()) {
    const Perm s = Perm::adjacent_transposition(n, letter);
    std::map<BasisWord, Laurent> next;
    for (const auto& [word, c] : state) {
      const Perm& x = word.perm;
      next[BasisWord(word.framing, x.after(s))] += c;
      const int u = x(letter);
      const int v = x(letter + 1);
      if (u > v) {
        // length drops: g_x g_s = g_{xs} + (q - q^{-1}) e_{x(i),x(i+1)} g_x
        const Laurent ec = c * split;
        for (int residue = 0; residue < d; ++residue) {
          std::vector<int> nf = word.framing;
          nf[static_cast<size_t>(u)] = mod_d(nf[static_cast<size_t>(u)] + residue, d);
          nf[static_cast<size_t>(v)] = mod_d(nf[static_cast<size_t>(v)] - residue, d);
          next[BasisWord(std::move(nf), x)] += ec;
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    state = std::move(next);
  }
  return state;
}

namespace {

// lcm of the term denominators, so the element can be rewritten with Laurent
// coefficients over one denominator
Laurent common_denominator(const AlgebraElement& a) {
  Laurent den(1);
  for (const auto& [w, c] : a.terms()) {
    const Laurent g = laurent_gcd(den, c.den());
    den = den * poly_divmod(c.den(), g, nullptr);
  }
  return den;
}

std::map<BasisWord, Laurent> cleared_numerators(const AlgebraElement& a,
                                                const Laurent& den) {
  std::map<BasisWord, Laurent> out;
  for (const auto& [w, c] : a.terms())
    out.emplace(w, c.num() * poly_divmod(den, c.den(), nullptr));
  return out;
}

}  // namespace

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.d() != b.d() || a.n() != b.n())
    throw AmbientMismatch("multiplying elements of different algebras");
  // Accumulate numerators over a cleared common denominator; one rational
  // canonicalization per term of the result instead of one per word pair.
  const Laurent den_a = common_denominator(a);
  const Laurent den_b = common_denominator(b);
  const std::map<BasisWord, Laurent> num_a = cleared_numerators(a, den_a);
  const std::map<BasisWord, Laurent> num_b = cleared_numerators(b, den_b);
  std::map<BasisWord, Laurent> acc;
  for (const auto& [wa, ca] : num_a) {
    for (const auto& [wb, cb] : num_b) {
      const Laurent cc = ca * cb;
      for (const auto& [w, lc] : word_product(a.d(), a.n(), wa, wb))
        acc[w] += cc * lc;
    }
  }
  const Laurent den = den_a * den_b;
  AlgebraElement out(a.d(), a.n());
  for (const auto& [w, num] : acc)
    if (!num.is_zero()) out.add_term(w, RatFun(num, den));
  return out;
}

AlgebraElement jm_element(int d, int n, int i, JmMode mode) {
  require_ambient(d, n);
  if (i < 1 || i > n) throw BadIndex("Jucys-Murphy index out of range");
  if (mode == JmMode::recursive) {
    AlgebraElement out = AlgebraElement::one(d, n);
    for (int m = 1; m < i; ++m) {
      const AlgebraElement g = gen_g(d, n, m);
      out = multiply(multiply(g, out), g);
    }
    return out;
  }
  // J_i = 1 + (q - q^{-1}) sum_{k<i} e_{k,i} g_{(k,i)}, written directly in
  // the split basis: the g-word for the transposition (k,i) carries framing
  // residues s on strand k and -s on strand i from e_{k,i}
  AlgebraElement out = AlgebraElement::one(d, n);
  const RatFun coeff{split_scalar(d)};
  for (int k = 1; k < i; ++k) {
    const Perm tr = Perm::transposition(n, k - 1, i - 1);
    for (int s = 0; s < d; ++s) {
      std::vector<int> f(static_cast<size_t>(n), 0);
      f[static_cast<size_t>(k - 1)] = s;
      f[static_cast<size_t>(i - 1)] = mod_d(-s, d);
      out.add_term(BasisWord(std::move(f), tr), coeff);
    }
  }
  return out;
}

RatFun tau(const AlgebraElement& a) {
  return a.coeff(BasisWord::identity(a.n()));
}

AlgebraElement dual_basis_word(int d, int n, const BasisWord& b) {
  require_ambient(d, n);
  const Perm winv = b.perm.inverse();
  // g_{w^{-1}} t^{d-k} = t^{f} g_{w^{-1}} with f_{w^{-1}(j)} = d - k_j
  std::vector<int> f(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    f[static_cast<size_t>(winv(j))] = mod_d(-b.framing[static_cast<size_t>(j)], d);
  return AlgebraElement::from_word(d, n, BasisWord(std::move(f), winv));
}

BasisWord embed_word(const BasisWord& w, int n) {
  const int m = w.perm.n();
  if (n < m) throw BadParameters("cannot embed into fewer strands");
  std::vector<int> f = w.framing;
  f.resize(static_cast<size_t>(n), 0);
  std::vector<int> images = w.perm.images();
  images.reserve(static_cast<size_t>(n));
  for (int i = m; i < n; ++i) images.push_back(i);
  return BasisWord(std::move(f), Perm(std::move(images)));
}

std::vector<BasisWord> enumerate_basis(int d, int n) {
  require_ambient(d, n);
  std::vector<std::vector<int>> perms;
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    perms.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<BasisWord> out;
  std::vector<int> f(static_cast<size_t>(n), 0);
  while (true) {
    for (const auto& p : perms) out.emplace_back(f, Perm(p));
    int pos = n - 1;
    while (pos >= 0 && f[static_cast<size_t>(pos)] == d - 1) {
      f[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++f[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace yhdn

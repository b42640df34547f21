#pragma once

// The algebra as a free module on the split basis t_1^{k_1}..t_n^{k_n} g_w,
// with exact multiplication by rewriting, Jucys-Murphy elements, the
// symmetrising trace, and the dual basis.

#include <map>
#include <string>
#include <vector>

#include "yhdn/laurent.hpp"
#include "yhdn/perm.hpp"
#include "yhdn/ratfun.hpp"

namespace yhdn {

struct BasisWord {
  std::vector<int> framing;  // exponent of t_j on strand j, residues 0..d-1
  Perm perm;

  BasisWord(std::vector<int> f, Perm p);  // BadParameters on size mismatch
  static BasisWord identity(int n);

  bool is_identity() const;
  friend auto operator<=>(const BasisWord&, const BasisWord&) = default;
  std::string str() const;  // e.g. "t1 t2^2 g[2,1]"
};

class AlgebraElement {
 public:
  AlgebraElement(int d, int n);  // the zero element
  static AlgebraElement one(int d, int n);
  static AlgebraElement from_word(int d, int n, const BasisWord& w);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::map<BasisWord, RatFun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFun coeff(const BasisWord& w) const;

  AlgebraElement& add_term(const BasisWord& w, const RatFun& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);  // AmbientMismatch
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  AlgebraElement scaled(const RatFun& c) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  void check_word(const BasisWord& w) const;

  int d_, n_;
  std::map<BasisWord, RatFun> terms_;
};

// generators; all indices 1-based, BadIndex when out of range
AlgebraElement gen_t(int d, int n, int j);
AlgebraElement gen_g(int d, int n, int i);
AlgebraElement gen_g_inverse(int d, int n, int i);
AlgebraElement gen_e(int d, int n, int i);              // e_i = e_{i,i+1}
AlgebraElement gen_e_pair(int d, int n, int i, int k);  // e_{i,k}; e_{i,i} = 1

// product of two split-basis words: slide the right framing left through the
// permutation, then expand the permutation product letter by letter. The
// coefficients stay Laurent (only powers of (q - q^{-1})/d ever appear).
std::map<BasisWord, Laurent> word_product(int d, int n, const BasisWord& a,
                                          const BasisWord& b);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

enum class JmMode { recursive, explicit_form };
AlgebraElement jm_element(int d, int n, int i, JmMode mode);  // J_i, 1 <= i <= n

// the symmetrising form: coefficient of the identity basis word
RatFun tau(const AlgebraElement& a);

// (t^k g_w)^dual = g_{w^{-1}} t^{d-k}, expressed in the split basis
AlgebraElement dual_basis_word(int d, int n, const BasisWord& b);

// the inclusion into one more strand: framing 0, permutation fixing n
BasisWord embed_word(const BasisWord& w, int n);

// all d^n * n! basis words in sorted order
std::vector<BasisWord> enumerate_basis(int d, int n);

}  // namespace yhdn

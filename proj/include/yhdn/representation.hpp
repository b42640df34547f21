#pragma once

// Irreducible representations on the standard-tableau basis: the framing
// generators act diagonally through the labelled roots of unity, a crossing
// acts by swapping entries i and i+1 of the tableau, with the two-term
// deformation when both entries sit in the same component. Also houses the
// rank-two affine fixtures that motivate those formulas.

#include <string>
#include <vector>

#include "yhdn/algebra.hpp"
#include "yhdn/combin.hpp"
#include "yhdn/matrix.hpp"
#include "yhdn/report.hpp"
#include "yhdn/xi.hpp"

namespace yhdn {

class Representation {
 public:
  int d() const { return xi_.d(); }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(tableaux_.size()); }
  const DPartition& shape() const { return shape_; }
  const XiOrder& xi() const { return xi_; }

  // row/column i corresponds to tableaux()[i]; the order is the canonical
  // content-key order from the combinatorics layer
  const std::vector<DTableau>& tableaux() const { return tableaux_; }
  int index_of(const DTableau& t) const;  // -1 when absent or not standard

  const RepMatrix& t_matrix(int j) const;  // 1-based, BadIndex
  const RepMatrix& g_matrix(int i) const;  // 1-based, BadIndex

 private:
  Representation(DPartition shape, XiOrder xi);
  friend Representation build_representation(int d, const DPartition& shape,
                                             const XiOrder& xi);

  int n_;
  DPartition shape_;
  XiOrder xi_;
  std::vector<DTableau> tableaux_;
  std::vector<RepMatrix> t_mats_;  // n
  std::vector<RepMatrix> g_mats_;  // n - 1
};

// EmptyShape when |shape| = 0; BadParameters when d disagrees with the shape
// or the root order
Representation build_representation(int d, const DPartition& shape);
Representation build_representation(int d, const DPartition& shape,
                                    const XiOrder& xi);

// linear extension to arbitrary elements; AmbientMismatch on wrong (d, n)
RepMatrix represent(const Representation& rep, const BasisWord& w);
RepMatrix represent(const Representation& rep, const AlgebraElement& a);

// diagonal matrices of the recursively conjugated framing elements; entry at
// tableau T is q^(2 cc(T|i))
std::vector<RepMatrix> jm_matrices(const Representation& rep);

// every defining relation as an exact matrix identity
Report verify_relations(const Representation& rep);

// same checks on raw matrix lists (n framings, n - 1 crossings), so a
// deliberately corrupted system can be diagnosed too
Report verify_relations(int d, const std::vector<RepMatrix>& t_mats,
                        const std::vector<RepMatrix>& g_mats);

RatFun character(const Representation& rep, const BasisWord& b);

// restriction along the chain: for every basis word of the (n-1)-strand
// algebra, the character of the restricted module equals the sum of the
// characters at the shapes with one removable node deleted
Report branching_check(int d, const DPartition& shape);  // BadParameters if |shape| < 2

// Rank-two affine fixtures. Family 1 is one-dimensional; families 2 and 3 are
// two-dimensional with the averaging idempotent acting as 1 and 0.
struct AffineY2Params {
  Cyclotomic a = 1;  // framing eigenvalue, a^d = 1
  Cyclotomic b = 1;  // second framing eigenvalue (family 3), b^d = 1
  RatFun c = RatFun(1);      // translation eigenvalue, nonzero
  RatFun d_eig = RatFun(1);  // second translation eigenvalue (families 2, 3)
  int epsilon = 1;           // crossing sign (family 1), +1 or -1
};

struct AffineY2Rep {
  int family = 1;
  int d = 1;
  AffineY2Params params;
  RepMatrix t1, t2, x1, x2, g;

  RepMatrix e() const;  // averaging idempotent (1/d) sum_s t1^s t2^(-s)
};

// BadParameters on any constraint violation: a^d = 1 (and b^d = 1), c and
// d_eig nonzero, family 2 needs d_eig distinct from c, c q^2, c q^-2, family 3
// needs a != b
AffineY2Rep affine_y2_representation(int d, int family, const AffineY2Params& p);

// defining relations of the rank-two affine algebra as matrix identities
Report verify_affine_relations(const AffineY2Rep& rep);

}  // namespace yhdn

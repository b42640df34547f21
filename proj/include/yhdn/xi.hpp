#pragma once

// The labelled d-th roots of unity xi_1..xi_d used for framing eigenvalues.
// Default labelling is xi_k = zeta_d^{k-1}; any relabelling is a permutation
// of {1..d} applied on top of it.

#include <vector>

#include "yhdn/cyclotomic.hpp"
#include "yhdn/errors.hpp"

namespace yhdn {

class XiOrder {
 public:
  explicit XiOrder(int d) : XiOrder(d, default_order(d)) {}

  // xi_k = zeta_d^{order[k-1] - 1}; order must be a permutation of {1..d}
  XiOrder(int d, const std::vector<int>& order) : d_(d) {
    if (d < 1) throw BadParameters("root count must be positive");
    if (static_cast<int>(order.size()) != d)
      throw BadParameters("root order has wrong length");
    std::vector<bool> seen(d, false);
    for (int v : order) {
      if (v < 1 || v > d || seen[v - 1])
        throw BadParameters("root order is not a permutation of 1..d");
      seen[v - 1] = true;
    }
    roots_.reserve(d);
    for (int k = 0; k < d; ++k)
      roots_.push_back(Cyclotomic::root(d, order[k] - 1));
  }

  int d() const { return d_; }

  const Cyclotomic& xi(int k) const {  // 1-based
    if (k < 1 || k > d_) throw BadIndex("root index out of range");
    return roots_[k - 1];
  }

  const std::vector<Cyclotomic>& roots() const { return roots_; }

 private:
  static std::vector<int> default_order(int d) {
    std::vector<int> order(d > 0 ? d : 0);
    for (int k = 0; k < d; ++k) order[k] = k + 1;
    return order;
  }

  int d_;
  std::vector<Cyclotomic> roots_;
};

}  // namespace yhdn

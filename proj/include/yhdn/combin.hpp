#pragma once

// d-partitions, d-nodes, standard d-tableaux, and content arrays, together
// with the bijection between standard d-tableaux of size n and content
// arrays. This layer is arithmetic-free: contents are stored as the integer
// m with c = q^{2m}, and positions as the index k of the root xi_k.

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace yhdn {

// weakly decreasing list of positive integers; empty = the zero partition
using Partition = std::vector<int>;

// row x, column y, component k, all 1-based
struct DNode {
  int x = 1;
  int y = 1;
  int k = 1;
  friend auto operator<=>(const DNode&, const DNode&) = default;
};

class DPartition {
 public:
  explicit DPartition(std::vector<Partition> components);  // BadParameters
  static DPartition empty(int d);

  int d() const { return static_cast<int>(comps_.size()); }
  int size() const;
  const Partition& component(int k) const;  // 1-based, BadIndex
  const std::vector<Partition>& components() const { return comps_; }

  int row_length(int k, int x) const;  // 0 when the row is absent
  int col_length(int k, int y) const;  // conjugate partition part
  bool contains(const DNode& node) const;

  DPartition with_added(const DNode& node) const;    // BadParameters if not addable
  DPartition with_removed(const DNode& node) const;  // BadParameters if not removable

  friend auto operator<=>(const DPartition&, const DPartition&) = default;

  std::string str() const;  // e.g. [[2,1],[]]

 private:
  std::vector<Partition> comps_;
};

struct NodeSets {
  std::vector<DNode> removable;  // sorted by (component, row)
  std::vector<DNode> addable;    // sorted by (component, row)
};

NodeSets node_sets(const DPartition& shape);

// classical content y - x
inline int classical_content(const DNode& node) { return node.y - node.x; }

int hook_length(const DPartition& shape, const DNode& node);  // NodeOutsideShape

class DTableau {
 public:
  // entry_nodes[i-1] is the node holding entry i; must be a bijection onto
  // the nodes of shape (BadParameters otherwise)
  DTableau(DPartition shape, std::vector<DNode> entry_nodes);

  const DPartition& shape() const { return shape_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const DNode& node_of(int i) const;    // 1-based entry, BadIndex
  int entry_at(const DNode& node) const;  // BadIndex if node outside shape
  bool is_standard() const;

  // (p(T|i), m) with c(T|i) = q^{2m}
  std::pair<int, int> data(int i) const;

  DTableau with_swapped(int i) const;  // entries i and i+1 exchanged; BadIndex

  friend bool operator==(const DTableau& a, const DTableau& b) {
    return a.shape_ == b.shape_ && a.nodes_ == b.nodes_;
  }
  friend bool operator!=(const DTableau& a, const DTableau& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  DPartition shape_;
  std::vector<DNode> nodes_;
};

struct ContentArray {
  std::vector<int> positions;     // in 1..d
  std::vector<int> content_exps;  // c_i = q^{2 exps[i]}
  friend auto operator<=>(const ContentArray&, const ContentArray&) = default;
};

// diagnosis: ok, or the first violated condition (1, 2 or 3)
struct ContentCheck {
  bool ok = true;
  int violated = 0;
};

ContentCheck check_content_array(const ContentArray& a, int d);

// the (position, content) sequence; the canonical sort key for tableaux
ContentArray content_key(const DTableau& t);

std::vector<DPartition> enumerate_dpartitions(int d, int n);

// all standard fillings, sorted by the lexicographic order of content_key
std::vector<DTableau> enumerate_standard_dtableaux(const DPartition& shape);

ContentArray tableau_to_content_array(const DTableau& t);            // NotStandard
DTableau content_array_to_tableau(const ContentArray& a, int d);     // NotContentArray

long eta(const DPartition& shape);

}  // namespace yhdn

#include "yhdn/combin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "yhdn/errors.hpp"

namespace yhdn {

namespace {

void require_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw BadParameters("partition parts must be positive");
    if (i + 1 < p.size() && p[i] < p[i + 1])
      throw BadParameters("partition parts must be weakly decreasing");
  }
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

DPartition::DPartition(std::vector<Partition> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) throw BadParameters("a d-partition needs at least one component");
  for (const Partition& p : comps_) require_partition(p);
}

DPartition DPartition::empty(int d) {
  if (d < 1) throw BadParameters("d must be positive");
  return DPartition(std::vector<Partition>(static_cast<size_t>(d)));
}

int DPartition::size() const {
  int total = 0;
  for (const Partition& p : comps_)
    total += std::accumulate(p.begin(), p.end(), 0);
  return total;
}

const Partition& DPartition::component(int k) const {
  if (k < 1 || k > d()) throw BadIndex("component index out of range");
  return comps_[static_cast<size_t>(k - 1)];
}

int DPartition::row_length(int k, int x) const {
  const Partition& p = component(k);
  if (x < 1 || x > static_cast<int>(p.size())) return 0;
  return p[static_cast<size_t>(x - 1)];
}

int DPartition::col_length(int k, int y) const {
  const Partition& p = component(k);
  int count = 0;
  for (int part : p)
    if (part >= y) ++count;
  return count;
}

bool DPartition::contains(const DNode& node) const {
  if (node.k < 1 || node.k > d() || node.x < 1 || node.y < 1) return false;
  return node.y <= row_length(node.k, node.x);
}

DPartition DPartition::with_added(const DNode& node) const {
  const int rows = static_cast<int>(component(node.k).size());
  const bool ok = node.x >= 1 && node.x <= rows + 1 &&
                  node.y == row_length(node.k, node.x) + 1 &&
                  (node.x == 1 || row_length(node.k, node.x - 1) >= node.y);
  if (!ok) throw BadParameters("node is not addable");
  std::vector<Partition> next = comps_;
  Partition& p = next[static_cast<size_t>(node.k - 1)];
  if (node.x == rows + 1)
    p.push_back(1);
  else
    ++p[static_cast<size_t>(node.x - 1)];
  return DPartition(std::move(next));
}

DPartition DPartition::with_removed(const DNode& node) const {
  const bool ok = contains(node) && node.y == row_length(node.k, node.x) &&
                  row_length(node.k, node.x + 1) < node.y;
  if (!ok) throw BadParameters("node is not removable");
  std::vector<Partition> next = comps_;
  Partition& p = next[static_cast<size_t>(node.k - 1)];
  if (--p[static_cast<size_t>(node.x - 1)] == 0) p.pop_back();
  return DPartition(std::move(next));
}

std::string DPartition::str() const {
  std::ostringstream os;
  os << '[';
  for (int k = 1; k <= d(); ++k) {
    if (k > 1) os << ',';
    os << partition_str(component(k));
  }
  os << ']';
  return os.str();
}

NodeSets node_sets(const DPartition& shape) {
  NodeSets out;
  for (int k = 1; k <= shape.d(); ++k) {
    const Partition& p = shape.component(k);
    const int rows = static_cast<int>(p.size());
    for (int x = 1; x <= rows; ++x) {
      const int len = shape.row_length(k, x);
      if (shape.row_length(k, x + 1) < len)
        out.removable.push_back({x, len, k});
    }
    for (int x = 1; x <= rows + 1; ++x) {
      const int len = shape.row_length(k, x);
      if (x == 1 || shape.row_length(k, x - 1) > len)
        out.addable.push_back({x, len + 1, k});
    }
  }
  const auto by_component_then_row = [](const DNode& a, const DNode& b) {
    return std::pair(a.k, a.x) < std::pair(b.k, b.x);
  };
  std::sort(out.removable.begin(), out.removable.end(), by_component_then_row);
  std::sort(out.addable.begin(), out.addable.end(), by_component_then_row);
  return out;
}

int hook_length(const DPartition& shape, const DNode& node) {
  if (!shape.contains(node))
    throw NodeOutsideShape("hook length of a node outside the shape");
  return shape.row_length(node.k, node.x) - node.x +
         shape.col_length(node.k, node.y) - node.y + 1;
}

DTableau::DTableau(DPartition shape, std::vector<DNode> entry_nodes)
    : shape_(std::move(shape)), nodes_(std::move(entry_nodes)) {
  if (static_cast<int>(nodes_.size()) != shape_.size())
    throw BadParameters("entry count does not match the number of nodes");
  std::vector<DNode> sorted = nodes_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (!shape_.contains(sorted[i]))
      throw BadParameters("tableau entry placed outside the shape");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw BadParameters("two entries share one node");
  }
}

const DNode& DTableau::node_of(int i) const {
  if (i < 1 || i > size()) throw BadIndex("tableau entry out of range");
  return nodes_[static_cast<size_t>(i - 1)];
}

int DTableau::entry_at(const DNode& node) const {
  if (!shape_.contains(node)) throw BadIndex("node outside the shape");
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == node) return static_cast<int>(i + 1);
  throw InternalInconsistency("tableau bijection has a hole");
}

bool DTableau::is_standard() const {
  for (int i = 1; i <= size(); ++i) {
    const DNode& node = node_of(i);
    if (node.y > 1 && entry_at({node.x, node.y - 1, node.k}) > i) return false;
    if (node.x > 1 && entry_at({node.x - 1, node.y, node.k}) > i) return false;
  }
  return true;
}

std::pair<int, int> DTableau::data(int i) const {
  const DNode& node = node_of(i);
  return {node.k, classical_content(node)};
}

DTableau DTableau::with_swapped(int i) const {
  if (i < 1 || i >= size()) throw BadIndex("transposition index out of range");
  std::vector<DNode> next = nodes_;
  std::swap(next[static_cast<size_t>(i - 1)], next[static_cast<size_t>(i)]);
  return DTableau(shape_, std::move(next));
}

std::string DTableau::str() const {
  std::ostringstream os;
  os << '[';
  for (int k = 1; k <= shape_.d(); ++k) {
    if (k > 1) os << ',';
    os << '[';
    const Partition& p = shape_.component(k);
    for (int x = 1; x <= static_cast<int>(p.size()); ++x) {
      if (x > 1) os << ',';
      os << '[';
      for (int y = 1; y <= shape_.row_length(k, x); ++y) {
        if (y > 1) os << ',';
        os << entry_at({x, y, k});
      }
      os << ']';
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

ContentCheck check_content_array(const ContentArray& a, int d) {
  const size_t n = a.positions.size();
  if (a.content_exps.size() != n)
    throw BadParameters("positions and contents must have equal length");

  // (1): c_1 = 1 and every a_i is one of the d-th roots of unity
  for (int pos : a.positions)
    if (pos < 1 || pos > d) return {false, 1};
  if (n > 0 && a.content_exps[0] != 0) return {false, 1};

  // (2): a nonunit content continues an existing diagonal neighbour
  for (size_t j = 1; j < n; ++j) {
    if (a.content_exps[j] == 0) continue;
    bool found = false;
    for (size_t i = 0; i < j && !found; ++i)
      found = a.positions[i] == a.positions[j] &&
              std::abs(a.content_exps[i] - a.content_exps[j]) == 1;
    if (!found) return {false, 2};
  }

  // (3): repeats on one diagonal are separated by both neighbouring diagonals
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = j + 1; k < n; ++k) {
      if (a.positions[j] != a.positions[k] ||
          a.content_exps[j] != a.content_exps[k])
        continue;
      if (k - j < 3) return {false, 3};
      bool below = false, above = false;
      for (size_t i = j + 1; i < k; ++i) {
        if (a.positions[i] != a.positions[j]) continue;
        if (a.content_exps[i] == a.content_exps[j] - 1) below = true;
        if (a.content_exps[i] == a.content_exps[j] + 1) above = true;
      }
      if (!below || !above) return {false, 3};
    }
  }
  return {true, 0};
}

ContentArray content_key(const DTableau& t) {
  ContentArray key;
  key.positions.reserve(static_cast<size_t>(t.size()));
  key.content_exps.reserve(static_cast<size_t>(t.size()));
  for (int i = 1; i <= t.size(); ++i) {
    const auto [pos, content] = t.data(i);
    key.positions.push_back(pos);
    key.content_exps.push_back(content);
  }
  return key;
}

namespace {

// partitions of n in descending lexicographic order
void gen_partitions(int n, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

void gen_dpartitions(int d, int n, std::vector<Partition>& cur,
                     std::vector<DPartition>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    for (const Partition& p : partitions_of(n)) {
      cur.push_back(p);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int m = n; m >= 0; --m) {
    for (const Partition& p : partitions_of(m)) {
      cur.push_back(p);
      gen_dpartitions(d, n - m, cur, out);
      cur.pop_back();
    }
  }
}

void gen_tableaux(const DPartition& shape, std::vector<DNode>& peeled,
                  const DPartition& full, std::vector<DTableau>& out) {
  if (shape.size() == 0) {
    std::vector<DNode> nodes(peeled.rbegin(), peeled.rend());
    out.emplace_back(full, std::move(nodes));
    return;
  }
  for (const DNode& node : node_sets(shape).removable) {
    peeled.push_back(node);
    gen_tableaux(shape.with_removed(node), peeled, full, out);
    peeled.pop_back();
  }
}

}  // namespace

std::vector<DPartition> enumerate_dpartitions(int d, int n) {
  if (d < 1) throw BadParameters("d must be positive");
  if (n < 0) throw BadParameters("n must be nonnegative");
  std::vector<DPartition> out;
  std::vector<Partition> cur;
  gen_dpartitions(d, n, cur, out);
  return out;
}

std::vector<DTableau> enumerate_standard_dtableaux(const DPartition& shape) {
  std::vector<DTableau> out;
  std::vector<DNode> peeled;
  gen_tableaux(shape, peeled, shape, out);
  std::sort(out.begin(), out.end(), [](const DTableau& a, const DTableau& b) {
    return content_key(a) < content_key(b);
  });
  return out;
}

ContentArray tableau_to_content_array(const DTableau& t) {
  if (!t.is_standard())
    throw NotStandard("content arrays are defined for standard tableaux");
  return content_key(t);
}

DTableau content_array_to_tableau(const ContentArray& a, int d) {
  const ContentCheck check = check_content_array(a, d);
  if (!check.ok)
    throw NotContentArray("condition (" + std::to_string(check.violated) +
                          ") fails");
  DPartition shape = DPartition::empty(d);
  std::vector<DNode> nodes;
  nodes.reserve(a.positions.size());
  for (size_t i = 0; i < a.positions.size(); ++i) {
    const int k = a.positions[i];
    const int c = a.content_exps[i];
    // first free node on diagonal c of component k
    int x = std::max(1, 1 - c);
    while (shape.row_length(k, x) >= x + c) ++x;
    const DNode node{x, x + c, k};
    try {
      shape = shape.with_added(node);
    } catch (const BadParameters&) {
      throw InternalInconsistency(
          "valid content array produced a non-addable node");
    }
    nodes.push_back(node);
  }
  return DTableau(std::move(shape), std::move(nodes));
}

long eta(const DPartition& shape) {
  long total = 0;
  for (int k = 1; k <= shape.d(); ++k) {
    const Partition& p = shape.component(k);
    for (size_t i = 0; i < p.size(); ++i)
      total += static_cast<long>(i) * p[i];
  }
  return total;
}

}  // namespace yhdn

#pragma once

// Permutations of {0..n-1} in one-line notation, with the length function
// and reduced words in the adjacent transpositions s_0..s_{n-2}.

#include <compare>
#include <string>
#include <vector>

namespace yhdn {

class Perm {
 public:
  explicit Perm(int n);                    // identity; n >= 0
  explicit Perm(std::vector<int> images);  // BadParameters unless a bijection

  static Perm adjacent_transposition(int n, int i);  // swaps i and i+1
  static Perm transposition(int n, int a, int b);    // swaps a and b

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;  // BadIndex
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  Perm inverse() const;
  Perm after(const Perm& inner) const;  // (f.after(g))(x) = f(g(x))

  int length() const;  // inversion count

  // one reduced expression, produced by repeatedly clearing the leftmost
  // descent; letters are 0-based
  std::vector<int> reduced_word() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

  std::vector<int> one_based() const;
  std::string str() const;  // one-line 1-based, e.g. [2,1,3]

 private:
  std::vector<int> images_;
};

}  // namespace yhdn

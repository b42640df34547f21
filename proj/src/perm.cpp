#include "yhdn/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "yhdn/errors.hpp"

namespace yhdn {

Perm::Perm(int n) {
  if (n < 0) throw BadParameters("permutation size must be nonnegative");
  images_.resize(static_cast<size_t>(n));
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= n() || seen[static_cast<size_t>(v)])
      throw BadParameters("one-line notation is not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::adjacent_transposition(int n, int i) {
  return transposition(n, i, i + 1);
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p(n);
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw BadIndex("transposition index out of range");
  std::swap(p.images_[static_cast<size_t>(a)], p.images_[static_cast<size_t>(b)]);
  return p;
}

int Perm::operator()(int i) const {
  if (i < 0 || i >= n()) throw BadIndex("permutation argument out of range");
  return images_[static_cast<size_t>(i)];
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < n(); ++i)
    inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return Perm(std::move(inv));
}

Perm Perm::after(const Perm& inner) const {
  if (inner.n() != n()) throw BadParameters("composing permutations of unequal size");
  std::vector<int> out(images_.size());
  for (int i = 0; i < n(); ++i)
    out[static_cast<size_t>(i)] = images_[static_cast<size_t>(inner(i))];
  return Perm(std::move(out));
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (images_[static_cast<size_t>(i)] > images_[static_cast<size_t>(j)]) ++inv;
  return inv;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> v = images_;
  std::vector<int> letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        letters.push_back(static_cast<int>(i));
        changed = true;
        break;
      }
    }
  }
  return {letters.rbegin(), letters.rend()};
}

std::vector<int> Perm::one_based() const {
  std::vector<int> out(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n(); ++i) {
    if (i) os << ',';
    os << images_[static_cast<size_t>(i)] + 1;
  }
  os << ']';
  return os.str();
}

}  // namespace yhdn

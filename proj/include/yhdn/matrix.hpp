#pragma once

// Dense square matrices over the rational functions in q. Small and exact;
// every product is a full Theta(dim^3) multiply.

#include <string>
#include <vector>

#include "yhdn/ratfun.hpp"

namespace yhdn {

class RepMatrix {
 public:
  RepMatrix() = default;            // 0 x 0
  explicit RepMatrix(int dim);      // zero matrix
  static RepMatrix identity(int dim);
  static RepMatrix diagonal(std::vector<RatFun> entries);

  int dim() const { return dim_; }
  const RatFun& at(int r, int c) const;  // BadIndex
  void set(int r, int c, RatFun v);      // BadIndex

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  std::vector<RatFun> diagonal_entries() const;

  RepMatrix& operator+=(const RepMatrix& o);  // BadParameters on size mismatch
  RepMatrix& operator-=(const RepMatrix& o);
  friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) { return a += b; }
  friend RepMatrix operator-(RepMatrix a, const RepMatrix& b) { return a -= b; }
  RepMatrix operator*(const RepMatrix& o) const;
  RepMatrix scaled(const RatFun& c) const;
  RepMatrix pow(int e) const;  // BadParameters when e < 0

  RatFun trace() const;

  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;

  std::string str() const;  // one row per line, entries separated by two spaces

 private:
  int dim_ = 0;
  std::vector<RatFun> e_;  // row-major
};

}  // namespace yhdn

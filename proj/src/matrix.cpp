#include "yhdn/matrix.hpp"

#include <sstream>
#include <utility>

#include "yhdn/errors.hpp"

namespace yhdn {

RepMatrix::RepMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw BadParameters("matrix dimension must be nonnegative");
  e_.assign(static_cast<size_t>(dim) * dim, RatFun());
}

RepMatrix RepMatrix::identity(int dim) {
  RepMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.e_[static_cast<size_t>(i) * dim + i] = RatFun(1);
  return m;
}

RepMatrix RepMatrix::diagonal(std::vector<RatFun> entries) {
  RepMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim_; ++i)
    m.e_[static_cast<size_t>(i) * m.dim_ + i] = std::move(entries[i]);
  return m;
}

const RatFun& RepMatrix::at(int r, int c) const {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
    throw BadIndex("matrix entry out of range");
  return e_[static_cast<size_t>(r) * dim_ + c];
}

void RepMatrix::set(int r, int c, RatFun v) {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
    throw BadIndex("matrix entry out of range");
  e_[static_cast<size_t>(r) * dim_ + c] = std::move(v);
}

bool RepMatrix::is_zero() const {
  for (const RatFun& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool RepMatrix::is_identity() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      const RatFun& x = e_[static_cast<size_t>(r) * dim_ + c];
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool RepMatrix::is_diagonal() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (r != c && !e_[static_cast<size_t>(r) * dim_ + c].is_zero()) return false;
  return true;
}

std::vector<RatFun> RepMatrix::diagonal_entries() const {
  std::vector<RatFun> out;
  out.reserve(dim_);
  for (int i = 0; i < dim_; ++i) out.push_back(e_[static_cast<size_t>(i) * dim_ + i]);
  return out;
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& o) {
  if (dim_ != o.dim_) throw BadParameters("matrix size mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

RepMatrix& RepMatrix::operator-=(const RepMatrix& o) {
  if (dim_ != o.dim_) throw BadParameters("matrix size mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

RepMatrix RepMatrix::operator*(const RepMatrix& o) const {
  if (dim_ != o.dim_) throw BadParameters("matrix size mismatch");
  RepMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const RatFun& a = e_[static_cast<size_t>(r) * dim_ + k];
      if (a.is_zero()) continue;
      for (int c = 0; c < dim_; ++c) {
        const RatFun& b = o.e_[static_cast<size_t>(k) * dim_ + c];
        if (b.is_zero()) continue;
        out.e_[static_cast<size_t>(r) * dim_ + c] += a * b;
      }
    }
  return out;
}

RepMatrix RepMatrix::scaled(const RatFun& c) const {
  RepMatrix out(dim_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
  return out;
}

RepMatrix RepMatrix::pow(int e) const {
  if (e < 0) throw BadParameters("matrix power must be nonnegative");
  RepMatrix acc = identity(dim_);
  RepMatrix base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

RatFun RepMatrix::trace() const {
  RatFun t;
  for (int i = 0; i < dim_; ++i) t += e_[static_cast<size_t>(i) * dim_ + i];
  return t;
}

std::string RepMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < dim_; ++r) {
    os << '[';
    for (int c = 0; c < dim_; ++c) {
      if (c) os << ", ";
      os << e_[static_cast<size_t>(r) * dim_ + c].str();
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace yhdn

#include "yhdn/representation.hpp"

#include <sstream>
#include <utility>

#include "yhdn/errors.hpp"

namespace yhdn {

namespace {

RatFun q_minus_qinv() { return RatFun::q_power(1) - RatFun::q_power(-1); }

// the two coefficients of the same-component crossing action, for contents
// q^(2a) at entry i and q^(2b) at entry i+1
RatFun stay_coeff(int a, int b) {
  const Laurent den = Laurent::q_power(2 * b) - Laurent::q_power(2 * a);
  if (den.is_zero()) throw InternalInconsistency("equal adjacent contents");
  return RatFun(Laurent::q_power(2 * b + 1) - Laurent::q_power(2 * b - 1), den);
}

RatFun move_coeff(int a, int b) {
  const Laurent den = Laurent::q_power(2 * b) - Laurent::q_power(2 * a);
  if (den.is_zero()) throw InternalInconsistency("equal adjacent contents");
  return RatFun(Laurent::q_power(2 * b + 1) - Laurent::q_power(2 * a - 1), den);
}

}  // namespace

Representation::Representation(DPartition shape, XiOrder xi)
    : n_(shape.size()), shape_(std::move(shape)), xi_(std::move(xi)) {}

int Representation::index_of(const DTableau& t) const {
  if (!t.is_standard()) return -1;
  for (int i = 0; i < dim(); ++i)
    if (tableaux_[i] == t) return i;
  return -1;
}

const RepMatrix& Representation::t_matrix(int j) const {
  if (j < 1 || j > n_) throw BadIndex("framing index out of range");
  return t_mats_[j - 1];
}

const RepMatrix& Representation::g_matrix(int i) const {
  if (i < 1 || i >= n_) throw BadIndex("crossing index out of range");
  return g_mats_[i - 1];
}

Representation build_representation(int d, const DPartition& shape) {
  return build_representation(d, shape, XiOrder(d));
}

Representation build_representation(int d, const DPartition& shape,
                                    const XiOrder& xi) {
  if (shape.size() == 0) throw EmptyShape("shape has no nodes");
  if (shape.d() != d) throw BadParameters("shape has the wrong number of components");
  if (xi.d() != d) throw BadParameters("root order has the wrong number of roots");

  Representation rep(shape, xi);
  rep.tableaux_ = enumerate_standard_dtableaux(shape);
  const int n = rep.n_;
  const int m = rep.dim();

  rep.t_mats_.reserve(n);
  for (int j = 1; j <= n; ++j) {
    std::vector<RatFun> diag;
    diag.reserve(m);
    for (const DTableau& t : rep.tableaux_)
      diag.push_back(RatFun(xi.xi(t.data(j).first)));
    rep.t_mats_.push_back(RepMatrix::diagonal(std::move(diag)));
  }

  rep.g_mats_.reserve(n - 1);
  for (int i = 1; i < n; ++i) {
    RepMatrix gm(m);
    for (int col = 0; col < m; ++col) {
      const DTableau& t = rep.tableaux_[col];
      const auto [pi, ci] = t.data(i);
      const auto [pj, cj] = t.data(i + 1);
      const DTableau swapped = t.with_swapped(i);
      if (pi != pj) {
        // entries in different components: pure swap, always standard
        gm.set(rep.index_of(swapped), col, RatFun(1));
      } else {
        gm.set(col, col, stay_coeff(ci, cj));
        const int row = rep.index_of(swapped);
        if (row >= 0) gm.set(row, col, move_coeff(ci, cj));
      }
    }
    rep.g_mats_.push_back(std::move(gm));
  }
  return rep;
}

RepMatrix represent(const Representation& rep, const BasisWord& w) {
  if (w.perm.n() != rep.n()) throw AmbientMismatch("word has the wrong strand count");
  RepMatrix m = RepMatrix::identity(rep.dim());
  for (int j = 0; j < rep.n(); ++j) {
    const int k = w.framing[j];
    if (k < 0 || k >= rep.d()) throw AmbientMismatch("framing residue out of range");
    if (k > 0) m = m * rep.t_matrix(j + 1).pow(k);
  }
  for (int letter : w.perm.reduced_word()) m = m * rep.g_matrix(letter + 1);
  return m;
}

RepMatrix represent(const Representation& rep, const AlgebraElement& a) {
  if (a.d() != rep.d() || a.n() != rep.n())
    throw AmbientMismatch("element and representation ambient differ");
  RepMatrix out(rep.dim());
  for (const auto& [word, coeff] : a.terms())
    out += represent(rep, word).scaled(coeff);
  return out;
}

std::vector<RepMatrix> jm_matrices(const Representation& rep) {
  std::vector<RepMatrix> out;
  out.reserve(rep.n());
  for (int i = 1; i <= rep.n(); ++i) {
    std::vector<RatFun> diag;
    diag.reserve(rep.dim());
    for (const DTableau& t : rep.tableaux())
      diag.push_back(RatFun::q_power(2 * t.data(i).second));
    out.push_back(RepMatrix::diagonal(std::move(diag)));
  }
  return out;
}

Report verify_relations(const Representation& rep) {
  std::vector<RepMatrix> t_mats, g_mats;
  for (int j = 1; j <= rep.n(); ++j) t_mats.push_back(rep.t_matrix(j));
  for (int i = 1; i < rep.n(); ++i) g_mats.push_back(rep.g_matrix(i));
  return verify_relations(rep.d(), t_mats, g_mats);
}

Report verify_relations(int d, const std::vector<RepMatrix>& t_mats,
                        const std::vector<RepMatrix>& g_mats) {
  const int n = static_cast<int>(t_mats.size());
  if (static_cast<int>(g_mats.size()) != n - 1)
    throw BadParameters("crossing count must be one less than the strand count");
  const int m = n > 0 ? t_mats[0].dim() : 0;
  const RepMatrix id = RepMatrix::identity(m);
  const auto t = [&](int j) -> const RepMatrix& { return t_mats[j - 1]; };
  const auto g = [&](int i) -> const RepMatrix& { return g_mats[i - 1]; };
  Report report;

  {
    bool pass = true;
    std::string detail;
    for (int i = 1; i <= n && pass; ++i)
      for (int j = i + 1; j <= n && pass; ++j)
        if (t(i) * t(j) != t(j) * t(i)) {
          pass = false;
          detail = "i=" + std::to_string(i) + " j=" + std::to_string(j);
        }
    report.add("framings commute", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int j = 1; j <= n && pass; ++j)
      if (!(t(j).pow(d) == id)) {
        pass = false;
        detail = "j=" + std::to_string(j);
      }
    report.add("framing order", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int i = 1; i < n && pass; ++i)
      for (int j = 1; j <= n && pass; ++j) {
        const int jj = j == i ? i + 1 : (j == i + 1 ? i : j);
        if (t(j) * g(i) != g(i) * t(jj)) {
          pass = false;
          detail = "i=" + std::to_string(i) + " j=" + std::to_string(j);
        }
      }
    report.add("framing slides across crossing", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int i = 1; i < n && pass; ++i)
      for (int j = i + 2; j < n && pass; ++j)
        if (g(i) * g(j) != g(j) * g(i)) {
          pass = false;
          detail = "i=" + std::to_string(i) + " j=" + std::to_string(j);
        }
    report.add("distant crossings commute", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int i = 1; i + 1 < n && pass; ++i)
      if (g(i) * g(i + 1) * g(i) != g(i + 1) * g(i) * g(i + 1)) {
        pass = false;
        detail = "i=" + std::to_string(i);
      }
    report.add("braid relation", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int i = 1; i < n && pass; ++i) {
      RepMatrix e(m);
      for (int s = 0; s < d; ++s)
        e += t(i).pow(s) * t(i + 1).pow((d - s) % d);
      e = e.scaled(RatFun(Rational(1, d)));
      if (g(i) * g(i) != id + (e * g(i)).scaled(q_minus_qinv())) {
        pass = false;
        detail = "i=" + std::to_string(i);
      }
    }
    report.add("quadratic relation", pass, detail);
  }
  return report;
}

RatFun character(const Representation& rep, const BasisWord& b) {
  return represent(rep, b).trace();
}

Report branching_check(int d, const DPartition& shape) {
  const int n = shape.size();
  if (n < 2) throw BadParameters("restriction needs at least two strands");

  const Representation rep = build_representation(d, shape);
  std::vector<Representation> parts;
  for (const DNode& node : node_sets(shape).removable)
    parts.push_back(build_representation(d, shape.with_removed(node)));

  Report report;
  int sub_dim = 0;
  for (const Representation& part : parts) sub_dim += part.dim();
  report.add("restriction dimensions add up", sub_dim == rep.dim(),
             shape.str());

  for (const BasisWord& b : enumerate_basis(d, n - 1)) {
    const RatFun lhs = character(rep, embed_word(b, n));
    RatFun rhs;
    for (const Representation& part : parts) rhs += character(part, b);
    report.add("restricted character at " + b.str(), lhs == rhs);
  }
  return report;
}

RepMatrix AffineY2Rep::e() const {
  RepMatrix acc(t1.dim());
  for (int s = 0; s < d; ++s) acc += t1.pow(s) * t2.pow((d - s) % d);
  return acc.scaled(RatFun(Rational(1, d)));
}

AffineY2Rep affine_y2_representation(int d, int family, const AffineY2Params& p) {
  if (d < 1) throw BadParameters("framing order must be positive");
  if (!p.a.pow(d).is_one()) throw BadParameters("a must be a d-th root of unity");
  if (p.c.is_zero()) throw BadParameters("c must be nonzero");

  AffineY2Rep rep;
  rep.family = family;
  rep.d = d;
  rep.params = p;
  const RatFun a(p.a);

  switch (family) {
    case 1: {
      if (p.epsilon != 1 && p.epsilon != -1)
        throw BadParameters("epsilon must be +1 or -1");
      rep.t1 = RepMatrix::diagonal({a});
      rep.t2 = rep.t1;
      rep.x1 = RepMatrix::diagonal({p.c});
      rep.x2 = RepMatrix::diagonal({p.c * RatFun::q_power(2 * p.epsilon)});
      const RatFun r = p.epsilon == 1 ? RatFun::q_power(1) : -RatFun::q_power(-1);
      rep.g = RepMatrix::diagonal({r});
      return rep;
    }
    case 2: {
      if (p.d_eig.is_zero()) throw BadParameters("d_eig must be nonzero");
      for (int shift : {0, 2, -2})
        if (p.d_eig == p.c * RatFun::q_power(shift))
          throw BadParameters("d_eig must avoid c, c q^2 and c q^-2");
      rep.t1 = RepMatrix::diagonal({a, a});
      rep.t2 = rep.t1;
      rep.x1 = RepMatrix::diagonal({p.c, p.d_eig});
      rep.x2 = RepMatrix::diagonal({p.d_eig, p.c});
      const RatFun inv = (p.d_eig - p.c).inverse();
      const RatFun q = RatFun::q_power(1);
      const RatFun qi = RatFun::q_power(-1);
      RepMatrix g(2);
      g.set(0, 0, p.d_eig * (q - qi) * inv);
      g.set(0, 1, -(q * p.c - qi * p.d_eig) * inv);
      g.set(1, 0, (q * p.d_eig - qi * p.c) * inv);
      g.set(1, 1, -(p.c * (q - qi)) * inv);
      rep.g = std::move(g);
      return rep;
    }
    case 3: {
      if (!p.b.pow(d).is_one()) throw BadParameters("b must be a d-th root of unity");
      if (p.a == p.b) throw BadParameters("a and b must differ");
      if (p.d_eig.is_zero()) throw BadParameters("d_eig must be nonzero");
      const RatFun b(p.b);
      rep.t1 = RepMatrix::diagonal({a, b});
      rep.t2 = RepMatrix::diagonal({b, a});
      rep.x1 = RepMatrix::diagonal({p.c, p.d_eig});
      rep.x2 = RepMatrix::diagonal({p.d_eig, p.c});
      RepMatrix g(2);
      g.set(0, 1, RatFun(1));
      g.set(1, 0, RatFun(1));
      rep.g = std::move(g);
      return rep;
    }
    default:
      throw BadParameters("family must be 1, 2 or 3");
  }
}

Report verify_affine_relations(const AffineY2Rep& rep) {
  const RepMatrix id = RepMatrix::identity(rep.g.dim());
  const RepMatrix e = rep.e();
  const RepMatrix ginv = rep.g + e.scaled(RatFun::q_power(-1) - RatFun::q_power(1));
  Report report;

  report.add("framing order", rep.t1.pow(rep.d) == id && rep.t2.pow(rep.d) == id);
  report.add("crossing inverse", rep.g * ginv == id && ginv * rep.g == id);
  report.add("crossing conjugates framings",
             rep.g * rep.t1 * ginv == rep.t2 && ginv * rep.t1 * rep.g == rep.t2);
  report.add("quadratic relation",
             rep.g * rep.g == id + (e * rep.g).scaled(q_minus_qinv()));
  report.add("mixed braid",
             rep.g * rep.x1 * rep.g * rep.x1 == rep.x1 * rep.g * rep.x1 * rep.g);
  report.add("crossing conjugates translations", rep.g * rep.x1 * rep.g == rep.x2);
  {
    const std::vector<const RepMatrix*> abelian = {&rep.t1, &rep.t2, &rep.x1, &rep.x2};
    bool pass = true;
    for (size_t i = 0; i < abelian.size() && pass; ++i)
      for (size_t j = i + 1; j < abelian.size() && pass; ++j)
        pass = *abelian[i] * *abelian[j] == *abelian[j] * *abelian[i];
    report.add("framings and translations commute", pass);
  }
  report.add("averaging idempotent central",
             e * e == e && e * rep.g == rep.g * e && e * rep.x1 == rep.x1 * e);
  return report;
}

}  // namespace yhdn

#include "yhdn/idempotents.hpp"

#include <set>
#include <string>
#include <utility>

#include "yhdn/errors.hpp"

namespace yhdn {

namespace {

AlgebraElement scalar_element(int d, int n, const RatFun& c) {
  return AlgebraElement::one(d, n).scaled(c);
}

// (J_i - q^{2a}) / (q^{2b} - q^{2a}) where b is the content of entry i
AlgebraElement content_factor(const AlgebraElement& jm, int d, int n, int a, int b) {
  const Laurent den = Laurent::q_power(2 * b) - Laurent::q_power(2 * a);
  if (den.is_zero()) throw InternalInconsistency("content factor with equal contents");
  const RatFun inv = RatFun(Laurent(Rational(1)), den);
  return (jm - scalar_element(d, n, RatFun(Laurent::q_power(2 * a)))).scaled(inv);
}

// (t_i - xi_other) / (xi_own - xi_other)
AlgebraElement position_factor(int d, int n, int i, const Cyclotomic& own,
                               const Cyclotomic& other) {
  const Cyclotomic den = own - other;
  if (den.is_zero()) throw InternalInconsistency("position factor with equal roots");
  return (gen_t(d, n, i) - scalar_element(d, n, RatFun(other))).scaled(RatFun(den).inverse());
}

AlgebraElement embed_element(const AlgebraElement& a, int n) {
  AlgebraElement out(a.d(), n);
  for (const auto& [word, coeff] : a.terms()) out.add_term(embed_word(word, n), coeff);
  return out;
}

}  // namespace

IdempotentRecord primitive_idempotent(const DTableau& t, int d, const XiOrder& xi) {
  if (t.shape().d() != d) throw BadParameters("component count does not match d");
  if (xi.d() != d) throw BadParameters("root order does not match d");
  if (!t.is_standard()) throw NotStandard("idempotents exist only for standard tableaux");
  const int n = t.size();

  IdempotentRecord rec{t, AlgebraElement::one(d, n), AlgebraElement::one(d, n),
                       AlgebraElement::one(d, n)};
  DPartition below = DPartition::empty(d);
  for (int i = 1; i <= n; ++i) {
    const DNode node = t.node_of(i);
    const AlgebraElement jm = jm_element(d, n, i, JmMode::explicit_form);
    for (const DNode& other : node_sets(below).addable) {
      if (other.k != node.k) continue;
      if (classical_content(other) == classical_content(node)) continue;
      const AlgebraElement factor = content_factor(
          jm, d, n, classical_content(other), classical_content(node));
      rec.element = multiply(rec.element, factor);
      rec.c_part = multiply(rec.c_part, factor);
    }
    const Cyclotomic own = xi.xi(node.k);
    for (int k = 1; k <= d; ++k) {
      if (k == node.k) continue;
      const AlgebraElement factor = position_factor(d, n, i, own, xi.xi(k));
      rec.element = multiply(rec.element, factor);
      rec.p_part = multiply(rec.p_part, factor);
    }
    below = below.with_added(node);
  }
  return rec;
}

IdempotentRecord primitive_idempotent(const DTableau& t, int d) {
  return primitive_idempotent(t, d, XiOrder(d));
}

AlgebraElement block_idempotent(const DPartition& shape, int d) {
  if (shape.d() != d) throw BadParameters("component count does not match d");
  AlgebraElement sum(d, shape.size());
  for (const DTableau& t : enumerate_standard_dtableaux(shape))
    sum += primitive_idempotent(t, d).element;
  return sum;
}

Report verify_idempotent_system(int d, int n) {
  if (d < 1 || n < 1) throw BadParameters("need d >= 1 and n >= 1");
  Report report;

  std::vector<IdempotentRecord> recs;
  for (const DPartition& shape : enumerate_dpartitions(d, n))
    for (const DTableau& t : enumerate_standard_dtableaux(shape))
      recs.push_back(primitive_idempotent(t, d));

  bool idem = true, orth = true;
  for (std::size_t a = 0; a < recs.size() && (idem || orth); ++a)
    for (std::size_t b = a; b < recs.size(); ++b) {
      const AlgebraElement prod = multiply(recs[a].element, recs[b].element);
      if (a == b && !(prod == recs[a].element)) {
        idem = false;
        break;
      }
      if (a != b && !prod.is_zero()) {
        orth = false;
        break;
      }
    }
  report.add("idempotency", idem);
  report.add("pairwise orthogonality", orth);

  AlgebraElement sum(d, n);
  for (const IdempotentRecord& rec : recs) sum += rec.element;
  report.add("resolution of identity", sum == AlgebraElement::one(d, n));

  const XiOrder xi(d);
  bool eigen = true;
  for (const IdempotentRecord& rec : recs) {
    for (int i = 1; i <= n && eigen; ++i) {
      const auto [pos, content] = rec.tableau.data(i);
      const AlgebraElement jm = jm_element(d, n, i, JmMode::explicit_form);
      if (!(multiply(jm, rec.element) ==
            rec.element.scaled(RatFun::q_power(2 * content))))
        eigen = false;
      if (!(multiply(gen_t(d, n, i), rec.element) ==
            rec.element.scaled(RatFun(xi.xi(pos)))))
        eigen = false;
    }
    if (!eigen) break;
  }
  report.add("framing and content eigenvalues", eigen);

  Rational scale(1);
  for (int i = 0; i < n; ++i) scale = scale * Rational(1, d);
  bool traces = true;
  for (const IdempotentRecord& rec : recs)
    if (!(tau(rec.p_part) == RatFun(scale))) {
      traces = false;
      break;
    }
  report.add("position part trace", traces);

  bool split = true;
  for (const IdempotentRecord& rec : recs)
    if (!(multiply(rec.p_part, rec.c_part) == rec.element)) {
      split = false;
      break;
    }
  report.add("position content factorization", split);

  bool expand = true;
  if (n >= 2) {
    for (const DPartition& shape : enumerate_dpartitions(d, n - 1)) {
      for (const DTableau& u : enumerate_standard_dtableaux(shape)) {
        AlgebraElement rhs(d, n);
        std::vector<DNode> nodes;
        for (int i = 1; i <= n - 1; ++i) nodes.push_back(u.node_of(i));
        for (const DNode& psi : node_sets(shape).addable) {
          std::vector<DNode> grown = nodes;
          grown.push_back(psi);
          const DTableau t(shape.with_added(psi), grown);
          rhs += primitive_idempotent(t, d).element;
        }
        if (!(embed_element(primitive_idempotent(u, d).element, n) == rhs)) {
          expand = false;
          break;
        }
      }
      if (!expand) break;
    }
  }
  report.add("one fewer strand expansion", expand);

  return report;
}

bool jm_separation_check(int d, int n) {
  if (d < 1 || n < 1) throw BadParameters("need d >= 1 and n >= 1");
  const XiOrder xi(d);
  std::set<std::string> seen;
  int total = 0;
  for (const DPartition& shape : enumerate_dpartitions(d, n))
    for (const DTableau& t : enumerate_standard_dtableaux(shape)) {
      ++total;
      std::string key;
      for (int i = 1; i <= n; ++i) {
        const auto [pos, content] = t.data(i);
        key += xi.xi(pos).str();
        key += '|';
        key += Laurent::q_power(2 * content).str();
        key += ';';
      }
      seen.insert(key);
    }
  return static_cast<int>(seen.size()) == total;
}

}  // namespace yhdn

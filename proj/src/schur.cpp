#include "yhdn/schur.hpp"

#include <vector>

#include "yhdn/algebra.hpp"
#include "yhdn/errors.hpp"
#include "yhdn/idempotents.hpp"
#include "yhdn/ratfun.hpp"
#include "yhdn/representation.hpp"

namespace yhdn {

namespace {

// q^{2(h-1)} + ... + q^2 + 1
Laurent bracket_qsq(int h) {
  Laurent sum;
  for (int j = 0; j < h; ++j) sum += Laurent::q_power(2 * j);
  return sum;
}

// (q^h - q^{-h}) / (q - q^{-1}) = q^{h-1} + q^{h-3} + ... + q^{1-h}
Laurent balanced_bracket(int h) {
  Laurent sum;
  for (int j = 0; j < h; ++j) sum += Laurent::q_power(h - 1 - 2 * j);
  return sum;
}

std::vector<DNode> all_nodes(const DPartition& shape) {
  std::vector<DNode> nodes;
  for (int k = 1; k <= shape.d(); ++k) {
    const Partition& comp = shape.components()[k - 1];
    for (int x = 1; x <= static_cast<int>(comp.size()); ++x)
      for (int y = 1; y <= comp[x - 1]; ++y) nodes.push_back(DNode{x, y, k});
  }
  return nodes;
}

Laurent d_power(int d, int n) {
  Rational p(1);
  for (int i = 0; i < n; ++i) p = p * Rational(d);
  return Laurent(p);
}

}  // namespace

SchurElement schur_element(int d, const DPartition& shape, SchurForm form) {
  if (shape.d() != d) throw BadParameters("component count does not match d");
  const int n = shape.size();
  Laurent value = d_power(d, n);
  if (form == SchurForm::hook) {
    value = value.shifted(static_cast<int>(-2 * eta(shape)));
    for (const DNode& node : all_nodes(shape))
      value *= bracket_qsq(hook_length(shape, node));
  } else {
    for (const DNode& node : all_nodes(shape))
      value *= balanced_bracket(hook_length(shape, node))
                   .shifted(classical_content(node));
  }
  return SchurElement{shape, value};
}

SchurElement schur_via_trace(int d, const DPartition& shape, bool verify_all) {
  if (shape.d() != d) throw BadParameters("component count does not match d");
  if (shape.size() < 1) throw BadParameters("need at least one strand");
  const std::vector<DTableau> tabs = enumerate_standard_dtableaux(shape);
  Laurent value;
  for (std::size_t i = 0; i < tabs.size(); ++i) {
    if (i > 0 && !verify_all) break;
    const RatFun trace = tau(primitive_idempotent(tabs[i], d).element);
    if (trace.is_zero())
      throw InternalInconsistency("idempotent with vanishing trace");
    const RatFun inv = trace.inverse();
    if (!inv.is_laurent())
      throw InternalInconsistency("inverse trace is not a Laurent polynomial");
    if (i == 0) {
      value = inv.as_laurent();
    } else if (!(inv.as_laurent() == value)) {
      throw InternalInconsistency("inverse trace depends on the tableau");
    }
  }
  return SchurElement{shape, value};
}

Laurent semisimplicity_poly(int n) {
  if (n < 1) throw BadParameters("need n >= 1");
  Laurent p(1);
  for (int m = 1; m <= n; ++m) p *= bracket_qsq(m);
  return p;
}

SemisimplicityVerdict semisimple_at(int d, int n, const Cyclotomic& qbar) {
  if (qbar.is_zero()) throw BadParameters("specialization point must be nonzero");
  SemisimplicityVerdict verdict;
  verdict.semisimple = !semisimplicity_poly(n).evaluate(qbar).is_zero();
  for (const DPartition& shape : enumerate_dpartitions(d, n))
    if (schur_element(d, shape, SchurForm::hook).value.evaluate(qbar).is_zero())
      verdict.vanishing.push_back(shape);
  if (verdict.semisimple != verdict.vanishing.empty())
    throw InternalInconsistency("semisimplicity criteria disagree");
  return verdict;
}

Report tau_decomposition_check(int d, int n, ExecMode mode) {
  std::vector<Representation> reps;
  std::vector<RatFun> inv_schur;
  for (const DPartition& shape : enumerate_dpartitions(d, n)) {
    reps.push_back(build_representation(d, shape));
    inv_schur.push_back(RatFun(schur_element(d, shape, SchurForm::hook).value).inverse());
  }
  const std::vector<BasisWord> words = enumerate_basis(d, n);
  // vector<char>, not vector<bool>: slots must be independently writable
  std::vector<char> passes(words.size(), 0);
  for_indices(words.size(), mode, [&](std::size_t w) {
    RatFun rhs;
    for (std::size_t i = 0; i < reps.size(); ++i)
      rhs += character(reps[i], words[w]) * inv_schur[i];
    passes[w] = tau(AlgebraElement::from_word(d, n, words[w])) == rhs ? 1 : 0;
  });
  Report report;
  for (std::size_t w = 0; w < words.size(); ++w)
    report.add("trace decomposition at " + words[w].str(), passes[w] != 0);
  return report;
}

}  // namespace yhdn

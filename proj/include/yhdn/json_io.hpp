#pragma once

// JSON encodings for the exact scalar tower, basis words, elements, shapes,
// tableaux and matrices. Encodings are lossless: every *_from_json inverts
// its *_json companion. Key order and array order are canonical, so dumps
// are byte-deterministic.

#include <json.hpp>
#include <string>
#include <vector>

#include "yhdn/algebra.hpp"
#include "yhdn/combin.hpp"
#include "yhdn/errors.hpp"
#include "yhdn/matrix.hpp"
#include "yhdn/report.hpp"

namespace yhdn {

using Json = nlohmann::json;

// "p" or "p/q"
inline Json rational_json(const Rational& r) { return r.str(); }
inline Rational rational_from_json(const Json& j) {
  return Rational::parse(j.get<std::string>());
}

// plain rationals stay strings; higher orders carry the residue coefficients
inline Json cyclotomic_json(const Cyclotomic& c) {
  if (c.is_rational()) return rational_json(c.as_rational());
  Json coeffs = Json::array();
  for (const Rational& r : c.coeffs()) coeffs.push_back(rational_json(r));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}
inline Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_string()) return Cyclotomic(rational_from_json(j));
  std::vector<Rational> poly;
  for (const Json& c : j.at("coeffs")) poly.push_back(rational_from_json(c));
  return Cyclotomic::reduce(j.at("order").get<unsigned>(), std::move(poly));
}

// ascending [exponent, coefficient] pairs
inline Json laurent_json(const Laurent& l) {
  Json terms = Json::array();
  for (const auto& [e, c] : l.terms()) terms.push_back(Json{e, cyclotomic_json(c)});
  return terms;
}
inline Laurent laurent_from_json(const Json& j) {
  Laurent out;
  for (const Json& t : j)
    out += Laurent::monomial(t.at(0).get<int>(), cyclotomic_from_json(t.at(1)));
  return out;
}

inline Json ratfun_json(const RatFun& f) {
  return Json{{"num", laurent_json(f.num())}, {"den", laurent_json(f.den())}};
}
inline RatFun ratfun_from_json(const Json& j) {
  return RatFun(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

// {"framing": residues per strand, "perm": one-based images}
inline Json basis_word_json(const BasisWord& w) {
  return Json{{"framing", w.framing}, {"perm", w.perm.one_based()}};
}
inline BasisWord basis_word_from_json(const Json& j) {
  std::vector<int> images = j.at("perm").get<std::vector<int>>();
  for (int& v : images) --v;
  return BasisWord(j.at("framing").get<std::vector<int>>(), Perm(std::move(images)));
}

inline Json element_json(const AlgebraElement& a) {
  Json terms = Json::array();
  for (const auto& [w, c] : a.terms())
    terms.push_back(Json{basis_word_json(w), ratfun_json(c)});
  return Json{{"d", a.d()}, {"n", a.n()}, {"terms", terms}};
}
inline AlgebraElement element_from_json(const Json& j) {
  AlgebraElement out(j.at("d").get<int>(), j.at("n").get<int>());
  for (const Json& t : j.at("terms"))
    out.add_term(basis_word_from_json(t.at(0)), ratfun_from_json(t.at(1)));
  return out;
}

// nested arrays, one inner array of row lengths per component
inline Json dpartition_json(const DPartition& shape) {
  Json comps = Json::array();
  for (const Partition& c : shape.components()) comps.push_back(c);
  return comps;
}
inline DPartition dpartition_from_json(const Json& j) {
  if (!j.is_array()) throw BadParameters("shape must be a JSON array");
  std::vector<Partition> comps;
  if (j.empty() || j.front().is_number()) {
    // a flat array of row lengths is the one-component shorthand
    comps.push_back(j.get<Partition>());
  } else {
    for (const Json& c : j) comps.push_back(c.get<Partition>());
  }
  return DPartition(std::move(comps));
}

// {"shape":…, "entries": one [row, column, component] triple per entry}
inline Json dtableau_json(const DTableau& t) {
  Json entries = Json::array();
  for (int i = 1; i <= t.size(); ++i) {
    const DNode node = t.node_of(i);
    entries.push_back(Json{node.x, node.y, node.k});
  }
  return Json{{"shape", dpartition_json(t.shape())}, {"entries", entries}};
}
inline DTableau dtableau_from_json(const Json& j) {
  std::vector<DNode> nodes;
  for (const Json& e : j.at("entries"))
    nodes.push_back(DNode{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  return DTableau(dpartition_from_json(j.at("shape")), std::move(nodes));
}

inline Json matrix_json(const RepMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(ratfun_json(m.at(r, c)));
    rows.push_back(row);
  }
  return Json{{"dim", m.dim()}, {"entries", rows}};
}
inline RepMatrix matrix_from_json(const Json& j) {
  RepMatrix m(j.at("dim").get<int>());
  const Json& rows = j.at("entries");
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      m.set(r, c, ratfun_from_json(rows.at(r).at(c)));
  return m;
}

inline Json report_json(const Report& report) {
  Json checks = Json::array();
  for (const CheckLine& l : report.lines()) {
    Json line{{"name", l.name}, {"pass", l.pass}};
    if (!l.pass && !l.detail.empty()) line["witness"] = l.detail;
    checks.push_back(line);
  }
  return Json{{"all_pass", report.all_pass()}, {"checks", checks}};
}

}  // namespace yhdn

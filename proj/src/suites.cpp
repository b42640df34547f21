#include "yhdn/suites.hpp"

#include <cstddef>

#include "yhdn/algebra.hpp"
#include "yhdn/combin.hpp"
#include "yhdn/errors.hpp"
#include "yhdn/idempotents.hpp"
#include "yhdn/representation.hpp"
#include "yhdn/schur.hpp"

namespace yhdn {

namespace {

// collapse a sub-report into one line whose witness is the first failure
CheckLine aggregate(std::string name, const Report& sub) {
  CheckLine line{std::move(name), sub.all_pass(), ""};
  if (!line.pass)
    for (const CheckLine& l : sub.lines())
      if (!l.pass) {
        line.detail = l.name + (l.detail.empty() ? "" : ": " + l.detail);
        break;
      }
  return line;
}

Report assemble(const std::vector<CheckLine>& lines) {
  Report report;
  for (const CheckLine& l : lines) report.add(l.name, l.pass, l.detail);
  return report;
}

}  // namespace

Report suite_relations(int d, int n, ExecMode mode) {
  const std::vector<DPartition> shapes = enumerate_dpartitions(d, n);
  std::vector<CheckLine> lines(shapes.size());
  for_indices(shapes.size(), mode, [&](std::size_t i) {
    const Report sub = verify_relations(build_representation(d, shapes[i]));
    lines[i] = aggregate("relations on " + shapes[i].str(), sub);
  });
  return assemble(lines);
}

Report suite_branching(int d, int n, ExecMode mode) {
  if (n < 2) {
    Report report;
    report.add("restriction", true, "no smaller algebra at n < 2");
    return report;
  }
  const std::vector<DPartition> shapes = enumerate_dpartitions(d, n);
  std::vector<CheckLine> lines(shapes.size());
  for_indices(shapes.size(), mode, [&](std::size_t i) {
    lines[i] = aggregate("restriction of " + shapes[i].str(),
                         branching_check(d, shapes[i]));
  });
  return assemble(lines);
}

Report suite_idempotents(int d, int n, ExecMode mode) {
  (void)mode;  // the seven checks share state and run as one unit
  return verify_idempotent_system(d, n);
}

Report suite_trace_form(int d, int n, ExecMode mode) {
  const std::vector<BasisWord> words = enumerate_basis(d, n);
  std::vector<CheckLine> lines(words.size());
  for_indices(words.size(), mode, [&](std::size_t i) {
    const AlgebraElement dual = dual_basis_word(d, n, words[i]);
    CheckLine line{"dual pairing against " + words[i].str(), true, ""};
    for (const BasisWord& other : words) {
      const RatFun pairing =
          tau(multiply(dual, AlgebraElement::from_word(d, n, other)));
      const bool hit = words[i] == other;
      if (pairing == RatFun(hit ? 1 : 0)) continue;
      line.pass = false;
      line.detail = "against " + other.str() + " got " + pairing.str();
      break;
    }
    lines[i] = line;
  });
  return assemble(lines);
}

Report suite_tau_decomposition(int d, int n, ExecMode mode) {
  return tau_decomposition_check(d, n, mode);
}

Report suite_jm_commute(int d, int n, ExecMode mode) {
  std::vector<AlgebraElement> family;
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) {
    family.push_back(gen_t(d, n, j));
    names.push_back("t" + std::to_string(j));
  }
  for (int i = 1; i <= n; ++i) {
    family.push_back(jm_element(d, n, i, JmMode::explicit_form));
    names.push_back("J" + std::to_string(i));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) pairs.emplace_back(a, b);

  std::vector<CheckLine> lines(pairs.size() + static_cast<std::size_t>(n));
  for_indices(pairs.size(), mode, [&](std::size_t i) {
    const auto [a, b] = pairs[i];
    lines[i] = CheckLine{names[a] + " commutes with " + names[b],
                         multiply(family[a], family[b]) ==
                             multiply(family[b], family[a]),
                         ""};
  });
  for_indices(static_cast<std::size_t>(n), mode, [&](std::size_t i) {
    const int idx = static_cast<int>(i) + 1;
    lines[pairs.size() + i] =
        CheckLine{"expanded form of J" + std::to_string(idx),
                  jm_element(d, n, idx, JmMode::explicit_form) ==
                      jm_element(d, n, idx, JmMode::recursive),
                  ""};
  });
  return assemble(lines);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "relations",  "branching",         "idempotents",
      "trace-form", "tau-decomposition", "jm-commute"};
  return names;
}

Report run_suite(const std::string& name, int d, int n, ExecMode mode) {
  if (name == "relations") return suite_relations(d, n, mode);
  if (name == "branching") return suite_branching(d, n, mode);
  if (name == "idempotents") return suite_idempotents(d, n, mode);
  if (name == "trace-form") return suite_trace_form(d, n, mode);
  if (name == "tau-decomposition") return suite_tau_decomposition(d, n, mode);
  if (name == "jm-commute") return suite_jm_commute(d, n, mode);
  throw BadParameters("unknown suite: " + name);
}

}  // namespace yhdn

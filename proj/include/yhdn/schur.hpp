#pragma once

// Schur elements in two closed forms plus the trace oracle, the
// semisimplicity polynomial, specialization verdicts, and the global
// decomposition of the trace into irreducible characters.

#include <vector>

#include "yhdn/combin.hpp"
#include "yhdn/cyclotomic.hpp"
#include "yhdn/laurent.hpp"
#include "yhdn/parallel.hpp"
#include "yhdn/report.hpp"

namespace yhdn {

// always a genuine Laurent polynomial: at q = 1 it takes the positive value
// d^n times the product of all hook lengths
struct SchurElement {
  DPartition shape;
  Laurent value;
};

enum class SchurForm {
  hook,    // d^n q^{-2 eta} prod [hl]_{q^2}
  content  // d^n prod q^{cc} {hl}_q
};

SchurElement schur_element(int d, const DPartition& shape, SchurForm form);

// 1 / tau(E_T) for the first standard tableau of the shape; with verify_all
// set, recomputes for every tableau and demands one answer
SchurElement schur_via_trace(int d, const DPartition& shape, bool verify_all = false);

// prod_{m=1}^{n} (q^{2(m-1)} + ... + q^2 + 1); nonvanishing of its value at
// qbar is the semisimplicity criterion
Laurent semisimplicity_poly(int n);

struct SemisimplicityVerdict {
  bool semisimple = true;
  std::vector<DPartition> vanishing;  // shapes whose Schur element vanishes
};

// evaluates both criteria at qbar != 0 and asserts they agree
SemisimplicityVerdict semisimple_at(int d, int n, const Cyclotomic& qbar);

// tau(b) = sum over shapes of character(b) / schur element, word by word
Report tau_decomposition_check(int d, int n, ExecMode mode = ExecMode::parallel);

}  // namespace yhdn

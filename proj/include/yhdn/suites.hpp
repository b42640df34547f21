#pragma once

// Named verification suites shared by the command line tool and the tests.
// Every suite returns a Report whose failing lines carry a minimal witness.

#include <string>
#include <vector>

#include "yhdn/parallel.hpp"
#include "yhdn/report.hpp"

namespace yhdn {

// defining relations of every irreducible representation at (d, n)
Report suite_relations(int d, int n, ExecMode mode = ExecMode::parallel);

// restriction to one fewer strand: dimensions and characters, every shape
Report suite_branching(int d, int n, ExecMode mode = ExecMode::parallel);

// the seven structural checks of the primitive idempotent system
Report suite_idempotents(int d, int n, ExecMode mode = ExecMode::parallel);

// tau pairs each basis word dually: tau(dual(b) b') = delta
Report suite_trace_form(int d, int n, ExecMode mode = ExecMode::parallel);

// tau(b) = sum of characters over Schur elements, word by word
Report suite_tau_decomposition(int d, int n, ExecMode mode = ExecMode::parallel);

// the framings and conjugated framings commute pairwise, and the two ways of
// building the conjugated family agree
Report suite_jm_commute(int d, int n, ExecMode mode = ExecMode::parallel);

const std::vector<std::string>& suite_names();

// dispatch by name; BadParameters on an unknown suite
Report run_suite(const std::string& name, int d, int n,
                 ExecMode mode = ExecMode::parallel);

}  // namespace yhdn

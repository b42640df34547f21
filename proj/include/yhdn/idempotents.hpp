#pragma once

// Primitive idempotents built from the commuting family of framing and
// conjugated-framing elements, one per standard tableau, together with the
// central block sums and the position/content factorization.

#include <vector>

#include "yhdn/algebra.hpp"
#include "yhdn/combin.hpp"
#include "yhdn/report.hpp"
#include "yhdn/xi.hpp"

namespace yhdn {

struct IdempotentRecord {
  DTableau tableau;
  AlgebraElement element;  // full idempotent
  AlgebraElement p_part;   // position factors, eigenprojection of the framings
  AlgebraElement c_part;   // content factors, eigenprojection of the conjugated family
};

// Entry-by-entry recursion: at entry i the content factors run over the
// addable nodes of the shape below entry i that share the component of entry
// i but not its content, and the position factors run over the other d - 1
// labelled roots. All factors commute, so the assembly order is canonical.
IdempotentRecord primitive_idempotent(const DTableau& t, int d);  // NotStandard
IdempotentRecord primitive_idempotent(const DTableau& t, int d, const XiOrder& xi);

// sum over all standard fillings of the shape; central
AlgebraElement block_idempotent(const DPartition& shape, int d);

// the seven structural checks of the full idempotent system at (d, n):
// idempotency, pairwise orthogonality, summing to one, framing and content
// eigenvalues, the 1/d^n trace of the position part, the position-content
// factorization, and the one-fewer-strand expansion
Report verify_idempotent_system(int d, int n);

// true iff the joint eigenvalue tuples of the commuting family separate all
// standard tableaux of size n, the witness that the family spans a maximal
// commutative subalgebra
bool jm_separation_check(int d, int n);

}  // namespace yhdn

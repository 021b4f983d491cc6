#pragma once

#include <vector>

#include "dmloc/coeff_ring.hpp"

namespace dmloc {

using PolyMatrix = std::vector<std::vector<CoeffElem>>;

/// Determinant over F_q[t] by fraction-free (Bareiss) elimination.
CoeffElem poly_determinant(const CoeffRing& ring, PolyMatrix m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form, each
/// monic. Works for rectangular matrices; the number of factors is the rank.
std::vector<CoeffElem> smith_invariant_factors(const CoeffRing& ring, PolyMatrix m);

/// True iff the rows of m generate A^n, n the number of columns.
bool rows_generate_free_module(const CoeffRing& ring, const PolyMatrix& m, size_t n);

}  // namespace dmloc

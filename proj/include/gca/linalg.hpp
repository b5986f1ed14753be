#pragma once

#include <vector>

#include "gca/rational.hpp"

namespace gca {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Exact determinant of a square rational matrix. Row denominators are
// cleared first, then fraction-free (Bareiss) elimination runs on the
// integer matrix; pivoting picks the first nonzero entry in each column,
// so the sign is deterministic. Singular matrices give 0.
Rational det_exact(const RationalMatrix& m);

// In-place reduced row echelon form. Returns the pivot column of each
// pivot row, in order.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

// Basis of the right nullspace of m (columns = `cols`, m may have any
// number of rows, rows shorter than `cols` are invalid). Basis vectors are
// produced from the RREF free columns in increasing column order.
std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols);

}  // namespace gca

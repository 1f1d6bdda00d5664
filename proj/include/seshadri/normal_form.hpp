#pragma once

#include <vector>

#include "seshadri/arith.hpp"

namespace seshadri {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Row-style Hermite normal form of the lattice spanned by the rows.
///
/// Returns only the nonzero rows: upper triangular in echelon form, each
/// pivot positive, entries above a pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

/// Diagonal of the Smith normal form: non-negative, each entry dividing the
/// next, length min(rows, cols).
std::vector<Integer> smith_diagonal(IntMatrix m);

}  // namespace seshadri

#pragma once

#include <cstdint>
#include <vector>

#include "monoideal/field.hpp"

namespace monoideal {

/// A sparse integer matrix, rows of (column, value) pairs sorted by
/// column.  Boundary matrices only ever hold +-1, but elimination is
/// exact over whatever field is requested.
struct SparseIntMatrix {
  int ncols = 0;
  std::vector<std::vector<std::pair<int, int>>> rows;
};

/// Rank over the requested field.  Characteristic 0 runs exact rational
/// elimination (GMP); characteristic p runs modular elimination.
long rank(const SparseIntMatrix& m, const FieldSpec& field);

}  // namespace monoideal

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pmb/matrix.hpp"

namespace pmb {

/// Work counters for the elimination kernels.
///
/// `row_ops` counts elementary row operations on the augmented matrix
/// [A | I]: swaps, scalings and row additions. `entry_ops` counts scalar
/// multiply/add operations, including the column operations that maintain
/// the inverse transform. Both are deterministic for a fixed input.
struct OpCount {
  std::uint64_t row_ops = 0;
  std::uint64_t entry_ops = 0;

  OpCount& operator+=(const OpCount& o) {
    row_ops += o.row_ops;
    entry_ops += o.entry_ops;
    return *this;
  }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

struct RrefResult {
  Matrix reduced;            // canonical reduced row echelon form of A
  Matrix transform;          // E, invertible, E * A == reduced
  Matrix transform_inverse;  // E^-1
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  OpCount ops;
};

/// Gauss-Jordan elimination. Columns are scanned left to right; the pivot is
/// the first unused row (top-down) with a nonzero entry, swapped into place,
/// normalized to 1 and cleared from every other row.
RrefResult rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Throws ShapeMismatch for non-square input and SingularMatrix when
/// rank < dimension.
Matrix inverse(const Matrix& a);

/// Columns spanning a complement of the column space of `a` inside
/// Q^{a.rows()}: E^-1 applied to the trailing rows() - rank standard basis
/// vectors. Returns a rows() x 0 matrix when `a` is surjective.
Matrix complement_columns(const Matrix& a, OpCount* ops = nullptr);

}  // namespace pmb

#pragma once

#include <array>

#include "pmb/module.hpp"
#include "pmb/report.hpp"
#include "pmb/rref.hpp"

namespace pmb {

/// V * H == H * V on every unit square; verdicts at the upper-right corner.
CriteriaReport<Degree2> check_commutativity(const Module2D& m, OpCount* ops = nullptr);

/// Every stored horizontal and vertical map has full column rank.
CriteriaReport<Degree2> check_injectivity_2d(const Module2D& m, OpCount* ops = nullptr);

/// At each (i,j) with i > alpha and j > gamma: rank [H | V] into M_{i,j}
/// must equal d_{i-1,j} + d_{i,j-1} - d_{i-1,j-1}, i.e. the images of the two
/// incoming maps meet exactly in the image of the diagonal. Marked unreliable
/// when commutativity or injectivity fails.
CriteriaReport<Degree2> check_intersection_condition(const Module2D& m, OpCount* ops = nullptr);

/// The three reports in evaluation order.
std::array<CriteriaReport<Degree2>, 3> check_criteria_2d(const Module2D& m, OpCount* ops = nullptr);

/// Homogeneous basis of a Z^2-indexed module. Checks run in the order
/// commutativity, injectivity, intersection; the first failing cell is
/// thrown as FreenessError<Degree2>. Generators are then extracted in
/// row-major window order: standard vectors at the window minimum, the
/// complement of the single incoming image on the bottom row and left
/// column, and the complement of Im H + Im V elsewhere.
Basis2D compute_basis_2d(const Module2D& m, OpCount* ops = nullptr);

}  // namespace pmb

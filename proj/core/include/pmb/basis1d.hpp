#pragma once

#include "pmb/module.hpp"
#include "pmb/report.hpp"
#include "pmb/rref.hpp"

namespace pmb {

/// Injectivity of every stored map A_i (rank A_i == d_i). The vanishing and
/// stabilization hypotheses hold by the window convention.
CriteriaReport<Degree1> check_criteria_1d(const Module1D& m);

/// Homogeneous basis of a Z-indexed module satisfying the injectivity
/// criterion. Starts from the standard basis of M_alpha; at each degree i+1
/// adds complement_columns(A_i), which spans a complement of Im A_i.
///
/// Throws FreenessError<Degree1> (NotInjectiveAt i) on the first map that is
/// not injective. Work is accumulated into `ops` when given.
Basis1D compute_basis_1d(const Module1D& m, OpCount* ops = nullptr);

}  // namespace pmb

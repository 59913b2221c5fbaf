#pragma once

// Brute-force ground truth for graded modules: decomposable subspaces, Betti
// counts, birth sets, basis verification and unique representation. Every
// routine works straight from the definitions with rank tests and never
// calls into the basis extractors.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmb/module.hpp"

namespace pmb {

/// Concatenation of all structure maps entering M_d from the previous
/// degree(s): A_{d-1} in 1D; [H | V] in 2D, with one block on the bottom row
/// or left column and none at the window minimum.
Matrix incoming_maps(const Module1D& m, Degree1 d);
Matrix incoming_maps(const Module2D& m, const Degree2& d);

/// dim D_d, the sum of all images arriving at degree d.
std::size_t decomposable_dim(const Module1D& m, Degree1 d);
std::size_t decomposable_dim(const Module2D& m, const Degree2& d);

/// b_d = dim M_d - dim D_d.
std::size_t betti(const Module1D& m, Degree1 d);
std::size_t betti(const Module2D& m, const Degree2& d);

/// (degree, b) for every window degree, in window order.
std::vector<std::pair<Degree1, std::size_t>> betti_table(const Module1D& m);
std::vector<std::pair<Degree2, std::size_t>> betti_table(const Module2D& m);

bool is_decomposable(const Module1D& m, const Element<Degree1>& x);
bool is_decomposable(const Module2D& m, const Element<Degree2>& x);

/// Minimal degrees l <= deg(x) inside the window with x in the image of the
/// structure map M_l -> M_deg(x). Sorted lexicographically.
std::vector<Degree1> birth_set_minimals(const Module1D& m, const Element<Degree1>& x);
std::vector<Degree2> birth_set_minimals(const Module2D& m, const Element<Degree2>& x);

/// The image of a homogeneous element under the structure map to `target`.
Vector push_forward(const Module1D& m, const Element<Degree1>& e, Degree1 target);
Vector push_forward(const Module2D& m, const Element<Degree2>& e, const Degree2& target);

template <class Degree>
struct VerifyOutcome {
  bool ok = true;
  std::optional<Degree> failing_degree;
  std::string reason;
};

/// At every window degree d, the pushed-forward images of all basis elements
/// of degree <= d must form a square invertible matrix.
VerifyOutcome<Degree1> verify_basis_detail(const Module1D& m, const Basis1D& basis);
VerifyOutcome<Degree2> verify_basis_detail(const Module2D& m, const Basis2D& basis);
bool verify_basis(const Module1D& m, const Basis1D& basis);
bool verify_basis(const Module2D& m, const Basis2D& basis);

/// Coordinates of x in terms of the basis: one coefficient per basis element
/// of degree <= deg(x), in basis order, with x = sum c_k * push_forward(e_k).
/// Throws BasisInvalid if the basis does not verify.
Vector represent(const Module1D& m, const Basis1D& basis, const Element<Degree1>& x);
Vector represent(const Module2D& m, const Basis2D& basis, const Element<Degree2>& x);

/// Inverse of `represent`: sum c_k * push_forward(e_k) at `target`, summing
/// over basis elements of degree <= target in basis order.
Vector combine(const Module1D& m, const Basis1D& basis, const Vector& coefficients, Degree1 target);
Vector combine(const Module2D& m, const Basis2D& basis, const Vector& coefficients,
               const Degree2& target);

}  // namespace pmb

#include "pmb/oracle.hpp"

#include <algorithm>

#include "pmb/errors.hpp"
#include "pmb/rref.hpp"

namespace pmb {

namespace {

std::vector<Degree1> window_degrees(const Module1D& m) {
  std::vector<Degree1> out;
  for (auto d = m.window().alpha; d <= m.window().beta; ++d) out.push_back(d);
  return out;
}

std::vector<Degree2> window_degrees(const Module2D& m) { return m.window().degrees(); }

bool in_window(const Module1D& m, Degree1 d) { return m.window().contains(d); }
bool in_window(const Module2D& m, const Degree2& d) { return m.window().contains(d); }

template <class Mod, class Degree>
void require_element(const Mod& m, const Element<Degree>& x) {
  if (!in_window(m, x.degree)) throw DegreeOutOfWindow("degree " + to_string(x.degree) + " outside window");
  if (x.vector.size() != m.dim(x.degree)) {
    throw ShapeMismatch("element at " + to_string(x.degree) + " has length " + std::to_string(x.vector.size()) +
                        ", expected " + std::to_string(m.dim(x.degree)));
  }
}

Matrix as_column(const Vector& v) { return Matrix::from_columns(v.size(), {v}); }

bool in_column_space(const Matrix& a, const Vector& x) {
  return rank(a) == rank(hconcat(a, as_column(x)));
}

template <class Mod, class Degree>
std::vector<std::pair<Degree, std::size_t>> betti_table_impl(const Mod& m) {
  std::vector<std::pair<Degree, std::size_t>> out;
  for (const auto& d : window_degrees(m)) out.emplace_back(d, betti(m, d));
  return out;
}

template <class Mod, class Degree>
std::vector<Degree> birth_set_impl(const Mod& m, const Element<Degree>& x) {
  require_element(m, x);
  std::vector<Degree> births;
  for (const auto& l : window_degrees(m)) {
    if (!leq(l, x.degree)) continue;
    if (in_column_space(m.composite_map(l, x.degree), x.vector)) births.push_back(l);
  }
  std::vector<Degree> minimals;
  for (const auto& s : births) {
    const bool dominated =
        std::any_of(births.begin(), births.end(), [&](const Degree& t) { return t != s && leq(t, s); });
    if (!dominated) minimals.push_back(s);
  }
  std::sort(minimals.begin(), minimals.end());
  return minimals;
}

template <class Mod, class Degree>
Vector push_forward_impl(const Mod& m, const Element<Degree>& e, const Degree& target) {
  require_element(m, e);
  return mat_vec(m.composite_map(e.degree, target), e.vector);
}

/// Columns are the images at `target` of every basis element below it.
template <class Mod, class Degree>
Matrix images_at(const Mod& m, const GradedBasis<Degree>& basis, const Degree& target) {
  std::vector<Vector> cols;
  for (const auto& e : basis.elements) {
    if (leq(e.degree, target)) cols.push_back(push_forward_impl(m, e, target));
  }
  return Matrix::from_columns(m.dim(target), cols);
}

template <class Mod, class Degree>
VerifyOutcome<Degree> verify_impl(const Mod& m, const GradedBasis<Degree>& basis) {
  for (const auto& e : basis.elements) {
    if (!in_window(m, e.degree)) {
      return {false, e.degree, "generator degree " + to_string(e.degree) + " outside window"};
    }
    if (e.vector.size() != m.dim(e.degree)) {
      return {false, e.degree,
              "generator at " + to_string(e.degree) + " has length " + std::to_string(e.vector.size()) +
                  ", expected " + std::to_string(m.dim(e.degree))};
    }
  }
  for (const auto& d : window_degrees(m)) {
    const Matrix cols = images_at(m, basis, d);
    if (cols.cols() != cols.rows()) {
      return {false, d,
              "degree " + to_string(d) + ": " + std::to_string(cols.cols()) + " generator images in a space of dimension " +
                  std::to_string(cols.rows())};
    }
    if (rank(cols) != cols.rows()) {
      return {false, d, "degree " + to_string(d) + ": generator images are linearly dependent"};
    }
  }
  return {};
}

template <class Mod, class Degree>
Vector represent_impl(const Mod& m, const GradedBasis<Degree>& basis, const Element<Degree>& x) {
  require_element(m, x);
  const auto outcome = verify_impl(m, basis);
  if (!outcome.ok) throw BasisInvalid(outcome.reason);
  return mat_vec(inverse(images_at(m, basis, x.degree)), x.vector);
}

template <class Mod, class Degree>
Vector combine_impl(const Mod& m, const GradedBasis<Degree>& basis, const Vector& coefficients,
                    const Degree& target) {
  Vector out(m.dim(target));
  std::size_t k = 0;
  for (const auto& e : basis.elements) {
    if (!leq(e.degree, target)) continue;
    if (k >= coefficients.size()) throw ShapeMismatch("too few coefficients");
    const Vector image = push_forward_impl(m, e, target);
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += coefficients[k] * image[r];
    ++k;
  }
  if (k != coefficients.size()) throw ShapeMismatch("too many coefficients");
  return out;
}

}  // namespace

Matrix incoming_maps(const Module1D& m, Degree1 d) {
  const std::size_t n = m.dim(d);
  if (d == m.window().alpha) return Matrix(n, 0);
  return m.map(d - 1);
}

Matrix incoming_maps(const Module2D& m, const Degree2& d) {
  const Window2D& w = m.window();
  const std::size_t n = m.dim(d);
  if (d == w.minimum()) return Matrix(n, 0);
  if (d.j == w.gamma) return m.hmap({d.i - 1, d.j});
  if (d.i == w.alpha) return m.vmap({d.i, d.j - 1});
  return hconcat(m.hmap({d.i - 1, d.j}), m.vmap({d.i, d.j - 1}));
}

std::size_t decomposable_dim(const Module1D& m, Degree1 d) { return rank(incoming_maps(m, d)); }
std::size_t decomposable_dim(const Module2D& m, const Degree2& d) { return rank(incoming_maps(m, d)); }

std::size_t betti(const Module1D& m, Degree1 d) { return m.dim(d) - decomposable_dim(m, d); }
std::size_t betti(const Module2D& m, const Degree2& d) { return m.dim(d) - decomposable_dim(m, d); }

std::vector<std::pair<Degree1, std::size_t>> betti_table(const Module1D& m) {
  return betti_table_impl<Module1D, Degree1>(m);
}
std::vector<std::pair<Degree2, std::size_t>> betti_table(const Module2D& m) {
  return betti_table_impl<Module2D, Degree2>(m);
}

bool is_decomposable(const Module1D& m, const Element<Degree1>& x) {
  require_element(m, x);
  return in_column_space(incoming_maps(m, x.degree), x.vector);
}
bool is_decomposable(const Module2D& m, const Element<Degree2>& x) {
  require_element(m, x);
  return in_column_space(incoming_maps(m, x.degree), x.vector);
}

std::vector<Degree1> birth_set_minimals(const Module1D& m, const Element<Degree1>& x) { return birth_set_impl(m, x); }
std::vector<Degree2> birth_set_minimals(const Module2D& m, const Element<Degree2>& x) { return birth_set_impl(m, x); }

Vector push_forward(const Module1D& m, const Element<Degree1>& e, Degree1 target) {
  return push_forward_impl(m, e, target);
}
Vector push_forward(const Module2D& m, const Element<Degree2>& e, const Degree2& target) {
  return push_forward_impl(m, e, target);
}

VerifyOutcome<Degree1> verify_basis_detail(const Module1D& m, const Basis1D& basis) { return verify_impl(m, basis); }
VerifyOutcome<Degree2> verify_basis_detail(const Module2D& m, const Basis2D& basis) { return verify_impl(m, basis); }
bool verify_basis(const Module1D& m, const Basis1D& basis) { return verify_impl(m, basis).ok; }
bool verify_basis(const Module2D& m, const Basis2D& basis) { return verify_impl(m, basis).ok; }

Vector represent(const Module1D& m, const Basis1D& basis, const Element<Degree1>& x) {
  return represent_impl(m, basis, x);
}
Vector represent(const Module2D& m, const Basis2D& basis, const Element<Degree2>& x) {
  return represent_impl(m, basis, x);
}

Vector combine(const Module1D& m, const Basis1D& basis, const Vector& coefficients, Degree1 target) {
  return combine_impl(m, basis, coefficients, target);
}
Vector combine(const Module2D& m, const Basis2D& basis, const Vector& coefficients, const Degree2& target) {
  return combine_impl(m, basis, coefficients, target);
}

}  // namespace pmb

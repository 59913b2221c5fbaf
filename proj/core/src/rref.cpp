#include "pmb/rref.hpp"

#include <string>
#include <utility>

#include "pmb/errors.hpp"

namespace pmb {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

RrefResult rref(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  RrefResult out{a, identity(m), identity(m), 0, {}, {}};
  Matrix& red = out.reduced;
  Matrix& e = out.transform;
  Matrix& einv = out.transform_inverse;
  OpCount& ops = out.ops;

  std::size_t p = 0;  // next pivot row
  for (std::size_t c = 0; c < n && p < m; ++c) {
    std::size_t r = p;
    while (r < m && sgn(red(r, c)) == 0) ++r;
    if (r == m) continue;

    if (r != p) {
      swap_rows(red, r, p);
      swap_rows(e, r, p);
      swap_cols(einv, r, p);
      ++ops.row_ops;
    }

    // E <- S E and E^-1 <- E^-1 S^-1 for the scaling S of row p.
    const Rational pivot = red(p, c);
    if (pivot != 1) {
      const Rational s = 1 / pivot;
      for (std::size_t j = c; j < n; ++j) red(p, j) *= s;
      for (std::size_t j = 0; j < m; ++j) e(p, j) *= s;
      for (std::size_t i = 0; i < m; ++i) einv(i, p) *= pivot;
      ++ops.row_ops;
      ops.entry_ops += (n - c) + 2 * m;
    }

    for (std::size_t k = 0; k < m; ++k) {
      if (k == p || sgn(red(k, c)) == 0) continue;
      const Rational f = red(k, c);
      for (std::size_t j = c; j < n; ++j) red(k, j) -= f * red(p, j);
      for (std::size_t j = 0; j < m; ++j) e(k, j) -= f * e(p, j);
      for (std::size_t i = 0; i < m; ++i) einv(i, p) += f * einv(i, k);
      ++ops.row_ops;
      ops.entry_ops += (n - c) + 2 * m;
    }

    out.pivot_columns.push_back(c);
    ++p;
  }
  out.rank = p;
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeMismatch("inverse of non-square " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " matrix");
  }
  RrefResult res = rref(a);
  if (res.rank < a.rows()) {
    throw SingularMatrix("matrix of size " + std::to_string(a.rows()) + " has rank " +
                         std::to_string(res.rank));
  }
  return std::move(res.transform);
}

Matrix complement_columns(const Matrix& a, OpCount* ops) {
  const RrefResult res = rref(a);
  if (ops) *ops += res.ops;
  return column_block(res.transform_inverse, res.rank, a.rows() - res.rank);
}

}  // namespace pmb

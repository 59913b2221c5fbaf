#include "oracles.hpp"

#include <utility>

namespace pmb::testing {

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 9) + 1;
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

namespace {

Matrix naive_product(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

Matrix dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng);
  return m;
}

}  // namespace

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, bool low_rank) {
  if (!low_rank) return dense(rng, rows, cols);
  const std::size_t inner = static_cast<std::size_t>(rng() % (std::min(rows, cols) + 1));
  return naive_product(dense(rng, rows, inner), dense(rng, inner, cols));
}

std::size_t bareiss_rank(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::vector<mpz_class>> z(m, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < m; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) z[r][c] = a(r, c).get_num() * (lcm / a(r, c).get_den());
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && z[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(z[p], z[rank]);
    for (std::size_t r = rank + 1; r < m; ++r) {
      for (std::size_t k = c + 1; k < n; ++k) {
        z[r][k] = (z[rank][c] * z[r][k] - z[r][c] * z[rank][k]) / prev;
      }
      z[r][c] = 0;
    }
    prev = z[rank][c];
    ++rank;
  }
  return rank;
}

bool is_canonical_rref(const Matrix& r) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  bool first = true;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c < r.cols() && sgn(r(i, c)) == 0) ++c;
    if (c == r.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (r(i, c) != 1) return false;
    if (!first && c <= last_pivot_col) return false;
    for (std::size_t k = 0; k < r.rows(); ++k) {
      if (k != i && sgn(r(k, c)) != 0) return false;
    }
    last_pivot_col = c;
    first = false;
  }
  return true;
}

Rational cofactor_det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(a(0, c)) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = a(r, k);
    const Rational term = a(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

std::vector<std::vector<bool>> monotone_paths(const Degree2& from, const Degree2& to) {
  if (from == to) return {{}};
  std::vector<std::vector<bool>> out;
  if (from.i < to.i) {
    for (auto p : monotone_paths({from.i + 1, from.j}, to)) {
      p.insert(p.begin(), true);
      out.push_back(std::move(p));
    }
  }
  if (from.j < to.j) {
    for (auto p : monotone_paths({from.i, from.j + 1}, to)) {
      p.insert(p.begin(), false);
      out.push_back(std::move(p));
    }
  }
  return out;
}

Matrix path_product(const Module2D& m, const Degree2& from, const std::vector<bool>& steps) {
  const std::size_t n = m.dim(from);
  Matrix acc(n, n);
  for (std::size_t k = 0; k < n; ++k) acc(k, k) = 1;
  Degree2 at = from;
  for (bool horizontal : steps) {
    const Matrix& step = horizontal ? m.hmap(at) : m.vmap(at);
    acc = naive_product(step, acc);
    if (horizontal) {
      ++at.i;
    } else {
      ++at.j;
    }
  }
  return acc;
}

Module2D constant_module(const Window2D& w, std::size_t n) {
  Module2D::Grid dims(w.width(), std::vector<std::size_t>(w.height(), n));
  std::map<Degree2, Matrix> h, v;
  Matrix id(n, n);
  for (std::size_t k = 0; k < n; ++k) id(k, k) = 1;
  for (const auto& d : w.degrees()) {
    if (d.i < w.beta) h[d] = id;
    if (d.j < w.delta) v[d] = id;
  }
  return Module2D(w, std::move(dims), std::move(h), std::move(v));
}

}  // namespace pmb::testing

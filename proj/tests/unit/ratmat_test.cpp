#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pmb/errors.hpp"
#include "pmb/matrix.hpp"
#include "pmb/rref.hpp"

using namespace pmb;
using pmb::testing::bareiss_rank;
using pmb::testing::is_canonical_rref;
using pmb::testing::random_matrix;

namespace {

Rational q(const char* s) { return parse_rational(s); }

}  // namespace

TEST_SUITE("ratmat") {

TEST_CASE("rational literals are parsed exactly and rendered canonically") {
  CHECK(to_string(q("2/4")) == "1/2");
  CHECK(to_string(q("3/1")) == "3");
  CHECK(to_string(q("-6/4")) == "-3/2");
  CHECK(to_string(q("0/7")) == "0");
  CHECK(q("0/7").get_den() == 1);
  CHECK(to_string(q("+5")) == "5");
  CHECK(to_string(q("123456789012345678901234567890/3")) == "41152263004115226300411522630");
  CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(q("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(q(""), std::invalid_argument);
  CHECK_THROWS_AS(q("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(q(" 1"), std::invalid_argument);
}

TEST_CASE("matmul, hconcat and identity") {
  const Matrix b = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK(matmul(identity(2), b) == b);
  CHECK(matmul(Matrix::from_rows({{1, 1}}), Matrix::from_rows({{1}, {1}})) == Matrix::from_rows({{2}}));

  const Matrix h = hconcat(Matrix(2, 1), Matrix(2, 2));
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 3);

  CHECK(identity(0).rows() == 0);
  CHECK(identity(0).cols() == 0);

  CHECK_THROWS_AS(matmul(Matrix(2, 3), Matrix(2, 3)), ShapeMismatch);
  CHECK_THROWS_AS(hconcat(Matrix(2, 1), Matrix(3, 1)), ShapeMismatch);
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<Rational>(3)), ShapeMismatch);
}

TEST_CASE("empty matrices are total") {
  // Maps into and out of the zero space.
  const Matrix into_zero(0, 3);
  const Matrix from_zero(3, 0);
  CHECK(matmul(into_zero, Matrix(3, 2)).rows() == 0);
  CHECK(matmul(from_zero, into_zero) == Matrix(3, 3));
  CHECK(matmul(into_zero, from_zero) == Matrix(0, 0));
  CHECK(rank(into_zero) == 0);
  CHECK(rank(from_zero) == 0);
  CHECK(complement_columns(from_zero) == identity(3));
  CHECK(complement_columns(into_zero).rows() == 0);
  CHECK(complement_columns(into_zero).cols() == 0);
  CHECK(inverse(Matrix(0, 0)) == Matrix(0, 0));
  const RrefResult r = rref(Matrix(0, 0));
  CHECK(r.rank == 0);
  CHECK(r.transform == Matrix(0, 0));
}

TEST_CASE("rref of the identity and of the zero matrix") {
  const RrefResult id = rref(identity(3));
  CHECK(id.reduced == identity(3));
  CHECK(id.transform == identity(3));
  CHECK(id.rank == 3);

  const RrefResult zero = rref(Matrix(2, 2));
  CHECK(zero.reduced == Matrix(2, 2));
  CHECK(zero.transform == identity(2));
  CHECK(zero.rank == 0);
}

TEST_CASE("rref of a rank-one 2x2 matrix") {
  // Hand Gauss-Jordan: scale row 0 by 1/2, subtract it from row 1.
  const Matrix a = Matrix::from_rows({{2, 4}, {1, 2}});
  const RrefResult r = rref(a);
  CHECK(r.reduced == Matrix::from_rows({{1, 2}, {0, 0}}));
  CHECK(r.transform == Matrix::from_rows({{q("1/2"), 0}, {q("-1/2"), 1}}));
  CHECK(r.rank == 1);
  CHECK(r.transform * a == r.reduced);
  CHECK(r.transform * r.transform_inverse == identity(2));
}

TEST_CASE("rank") {
  CHECK(rank(identity(4)) == 4);
  CHECK(rank(Matrix::from_rows({{1}, {0}})) == 1);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("inverse") {
  CHECK(inverse(identity(2)) == identity(2));
  CHECK(inverse(Matrix::from_rows({{2, 0}, {0, q("1/2")}})) == Matrix::from_rows({{q("1/2"), 0}, {0, 2}}));
  const Matrix a = Matrix::from_rows({{1, 1}, {0, 1}});
  CHECK(inverse(a) == Matrix::from_rows({{1, -1}, {0, 1}}));
  CHECK(a * inverse(a) == identity(2));
  CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
  CHECK_THROWS_AS(inverse(Matrix(2, 3)), ShapeMismatch);
}

TEST_CASE("complement_columns") {
  CHECK(complement_columns(Matrix::from_rows({{1}, {0}})) == Matrix::from_rows({{0}, {1}}));
  const Matrix surj = complement_columns(identity(2));
  CHECK(surj.rows() == 2);
  CHECK(surj.cols() == 0);
  CHECK(complement_columns(Matrix(2, 2)) == identity(2));

  // Pivot in the second row: the complement must avoid e_2's span.
  const Matrix c = complement_columns(Matrix::from_rows({{0}, {3}}));
  CHECK(c.cols() == 1);
  CHECK(rank(hconcat(Matrix::from_rows({{0}, {3}}), c)) == 2);
}

TEST_CASE("rref properties on random matrices") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = rng() % 7;
    const std::size_t n = rng() % 7;
    const Matrix a = random_matrix(rng, m, n, trial % 2 == 0);
    const RrefResult r = rref(a);
    CAPTURE(a);

    CHECK(r.transform * a == r.reduced);
    CHECK(r.transform * r.transform_inverse == identity(m));
    CHECK(is_canonical_rref(r.reduced));
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(r.rank == bareiss_rank(a));

    std::size_t nonzero_rows = 0;
    for (std::size_t i = 0; i < m; ++i) {
      bool zero = true;
      for (const auto& x : r.reduced.row(i)) zero = zero && sgn(x) == 0;
      nonzero_rows += zero ? 0 : 1;
    }
    CHECK(r.rank == nonzero_rows);

    // Canonical form is invariant under left multiplication by invertibles.
    Matrix qm = random_matrix(rng, m, m, false);
    if (bareiss_rank(qm) == m) CHECK(rref(qm * a).reduced == r.reduced);

    // Complement plus a column-space basis spans everything.
    const Matrix comp = complement_columns(a);
    CHECK(comp.cols() == m - r.rank);
    Matrix col_basis(m, 0);
    for (auto c : r.pivot_columns) col_basis = hconcat(col_basis, column_block(a, c, 1));
    CHECK(bareiss_rank(hconcat(col_basis, comp)) == m);

    // Row operations stay within a quadratic budget: at most one swap, one
    // scaling and m-1 eliminations per pivot.
    CHECK(r.ops.row_ops <= r.rank * (m + 1));
    CHECK(r.ops.row_ops <= 2 * m * m * std::max<std::size_t>(n, 1));
  }
}

TEST_CASE("rref is deterministic") {
  std::mt19937_64 rng(7);
  const Matrix a = random_matrix(rng, 5, 4, true);
  const RrefResult r1 = rref(a);
  const RrefResult r2 = rref(a);
  CHECK(r1.reduced == r2.reduced);
  CHECK(r1.transform == r2.transform);
  CHECK(r1.ops == r2.ops);
}

}  // TEST_SUITE

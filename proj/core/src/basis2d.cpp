#include "pmb/basis2d.hpp"

#include <string>

namespace pmb {

namespace {

Matrix counted_product(const Matrix& a, const Matrix& b, OpCount* ops) {
  if (ops) ops->entry_ops += a.rows() * a.cols() * b.cols();
  return a * b;
}

std::size_t counted_rank(const Matrix& a, OpCount* ops) {
  const RrefResult res = rref(a);
  if (ops) *ops += res.ops;
  return res.rank;
}

template <class Degree>
void record(CriteriaReport<Degree>& report, const CellVerdict<Degree>& v, FailureKind kind) {
  if (!v.pass && !report.first_failure) {
    report.first_failure = Failure<Degree>{kind, v.degree, v.direction, v.rank, v.expected};
  }
  report.pass = report.pass && v.pass;
  report.cells.push_back(v);
}

void throw_if_failed(const CriteriaReport<Degree2>& report) {
  if (report.first_failure) throw FreenessError<Degree2>(*report.first_failure);
}

}  // namespace

CriteriaReport<Degree2> check_commutativity(const Module2D& m, OpCount* ops) {
  CriteriaReport<Degree2> report;
  report.check = "commutativity";
  const Window2D& w = m.window();
  for (auto i = w.alpha; i < w.beta; ++i) {
    for (auto j = w.gamma; j < w.delta; ++j) {
      const Matrix right_then_up = counted_product(m.vmap({i + 1, j}), m.hmap({i, j}), ops);
      const Matrix up_then_right = counted_product(m.hmap({i, j + 1}), m.vmap({i, j}), ops);
      CellVerdict<Degree2> v{{i + 1, j + 1}, Direction::None, right_then_up == up_then_right, 0, 0};
      record(report, v, FailureKind::NotCommutative);
    }
  }
  return report;
}

CriteriaReport<Degree2> check_injectivity_2d(const Module2D& m, OpCount* ops) {
  CriteriaReport<Degree2> report;
  report.check = "injectivity";
  const Window2D& w = m.window();
  for (const Degree2& d : w.degrees()) {
    const std::size_t n = m.dim(d);
    if (d.i < w.beta) {
      const std::size_t h = counted_rank(m.hmap(d), ops);
      record(report, CellVerdict<Degree2>{d, Direction::Horizontal, h == n, h, n}, FailureKind::NotInjective);
    }
    if (d.j < w.delta) {
      const std::size_t v = counted_rank(m.vmap(d), ops);
      record(report, CellVerdict<Degree2>{d, Direction::Vertical, v == n, v, n}, FailureKind::NotInjective);
    }
  }
  return report;
}

namespace {

CriteriaReport<Degree2> intersection_cells(const Module2D& m, OpCount* ops) {
  CriteriaReport<Degree2> report;
  report.check = "intersection";
  const Window2D& w = m.window();
  for (auto i = w.alpha + 1; i <= w.beta; ++i) {
    for (auto j = w.gamma + 1; j <= w.delta; ++j) {
      const Matrix both = hconcat(m.hmap({i - 1, j}), m.vmap({i, j - 1}));
      const std::size_t r = counted_rank(both, ops);
      const auto expected = static_cast<long long>(m.dim({i - 1, j})) +
                            static_cast<long long>(m.dim({i, j - 1})) -
                            static_cast<long long>(m.dim({i - 1, j - 1}));
      CellVerdict<Degree2> v{{i, j}, Direction::None, false, r, 0};
      if (expected < 0) {
        report.notes.push_back("at " + to_string(Degree2{i, j}) +
                               ": diagonal source is larger than both incoming sources");
      } else {
        v.expected = static_cast<std::size_t>(expected);
        v.pass = r == v.expected;
      }
      record(report, v, FailureKind::IntersectionFail);
    }
  }
  return report;
}

}  // namespace

CriteriaReport<Degree2> check_intersection_condition(const Module2D& m, OpCount* ops) {
  CriteriaReport<Degree2> report = intersection_cells(m, ops);
  const bool commutes = check_commutativity(m).pass;
  const bool injective = check_injectivity_2d(m).pass;
  if (!commutes || !injective) {
    report.reliable = false;
    report.notes.push_back(std::string("verdicts unreliable: ") +
                           (!commutes ? "module does not commute" : "a structure map is not injective"));
  }
  return report;
}

std::array<CriteriaReport<Degree2>, 3> check_criteria_2d(const Module2D& m, OpCount* ops) {
  auto comm = check_commutativity(m, ops);
  auto inj = check_injectivity_2d(m, ops);
  auto inter = intersection_cells(m, ops);
  if (!comm.pass || !inj.pass) {
    inter.reliable = false;
    inter.notes.push_back(std::string("verdicts unreliable: ") +
                          (!comm.pass ? "module does not commute" : "a structure map is not injective"));
  }
  return {std::move(comm), std::move(inj), std::move(inter)};
}

Basis2D compute_basis_2d(const Module2D& m, OpCount* ops) {
  throw_if_failed(check_commutativity(m, ops));
  throw_if_failed(check_injectivity_2d(m, ops));
  throw_if_failed(intersection_cells(m, ops));

  const Window2D& w = m.window();
  Basis2D basis;
  for (const Degree2& d : w.degrees()) {
    if (d == w.minimum()) {
      const std::size_t n = m.dim(d);
      for (std::size_t k = 0; k < n; ++k) {
        Vector e(n);
        e[k] = 1;
        basis.elements.push_back({d, std::move(e)});
      }
      continue;
    }
    Matrix incoming;
    if (d.j == w.gamma) {
      incoming = m.hmap({d.i - 1, d.j});
    } else if (d.i == w.alpha) {
      incoming = m.vmap({d.i, d.j - 1});
    } else {
      incoming = hconcat(m.hmap({d.i - 1, d.j}), m.vmap({d.i, d.j - 1}));
    }
    const Matrix fresh = complement_columns(incoming, ops);
    for (std::size_t c = 0; c < fresh.cols(); ++c) basis.elements.push_back({d, fresh.column(c)});
  }
  return basis;
}

}  // namespace pmb

#include "pmb/basis1d.hpp"

#include <string>

namespace pmb {

CriteriaReport<Degree1> check_criteria_1d(const Module1D& m) {
  CriteriaReport<Degree1> report;
  report.check = "injectivity";
  const Window1D& w = m.window();
  for (auto i = w.alpha; i < w.beta; ++i) {
    const std::size_t r = rank(m.map(i));
    CellVerdict<Degree1> v{i, Direction::None, r == m.dim(i), r, m.dim(i)};
    if (!v.pass && !report.first_failure) {
      report.first_failure = Failure<Degree1>{FailureKind::NotInjective, i, Direction::None, r, m.dim(i)};
    }
    report.pass = report.pass && v.pass;
    report.cells.push_back(v);
  }
  if (report.pass && w.alpha < w.beta) {
    const auto last = w.beta - 1;
    if (report.cells.back().rank < m.dim(w.beta)) {
      report.notes.push_back("map out of degree " + std::to_string(last) +
                             " is not surjective; the module is taken to be constant from degree " +
                             std::to_string(w.beta) + " on");
    }
  }
  return report;
}

Basis1D compute_basis_1d(const Module1D& m, OpCount* ops) {
  const Window1D& w = m.window();
  Basis1D basis;
  const std::size_t d0 = m.dim(w.alpha);
  for (std::size_t k = 0; k < d0; ++k) {
    Vector e(d0);
    e[k] = 1;
    basis.elements.push_back({w.alpha, std::move(e)});
  }
  for (auto i = w.alpha; i < w.beta; ++i) {
    const Matrix& a = m.map(i);
    const RrefResult res = rref(a);
    if (ops) *ops += res.ops;
    if (res.rank < m.dim(i)) {
      throw FreenessError<Degree1>({FailureKind::NotInjective, i, Direction::None, res.rank, m.dim(i)});
    }
    for (std::size_t c = res.rank; c < a.rows(); ++c) {
      basis.elements.push_back({i + 1, res.transform_inverse.column(c)});
    }
  }
  return basis;
}

}  // namespace pmb

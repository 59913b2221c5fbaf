#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmb/module.hpp"

namespace pmb {

enum class FailureKind { NotCommutative, NotInjective, IntersectionFail };

enum class Direction { None, Horizontal, Vertical };

const char* to_string(FailureKind kind);  // "NotCommutativeAt", ...
const char* to_string(Direction dir);     // "", "horizontal", "vertical"

/// Verdict for one cell of one check. For rank checks `rank` is the measured
/// rank and `expected` the rank required to pass; commutativity leaves both 0.
/// Commutativity and intersection verdicts sit at the target corner of the
/// unit square; injectivity verdicts sit at the source of the map.
template <class Degree>
struct CellVerdict {
  Degree degree{};
  Direction direction = Direction::None;
  bool pass = true;
  std::size_t rank = 0;
  std::size_t expected = 0;
};

template <class Degree>
struct Failure {
  FailureKind kind = FailureKind::NotInjective;
  Degree degree{};
  Direction direction = Direction::None;
  std::size_t rank = 0;
  std::size_t expected = 0;

  /// e.g. "IntersectionFailAt (1,1)" or "NotInjectiveAt 0".
  std::string describe() const;
};

template <class Degree>
struct CriteriaReport {
  std::string check;
  bool pass = true;
  /// False when the verdicts rest on hypotheses that do not hold.
  bool reliable = true;
  std::vector<CellVerdict<Degree>> cells;
  std::optional<Failure<Degree>> first_failure;
  std::vector<std::string> notes;
};

/// Thrown by the basis extractors when a freeness criterion fails; no partial
/// basis is returned.
class FreenessErrorBase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Degree>
class FreenessError : public FreenessErrorBase {
 public:
  explicit FreenessError(Failure<Degree> failure)
      : FreenessErrorBase(failure.describe()), failure_(std::move(failure)) {}

  const Failure<Degree>& failure() const noexcept { return failure_; }

 private:
  Failure<Degree> failure_;
};

extern template struct Failure<Degree1>;
extern template struct Failure<Degree2>;

}  // namespace pmb

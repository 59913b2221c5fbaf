#include "pmb/report.hpp"

namespace pmb {

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::NotCommutative: return "NotCommutativeAt";
    case FailureKind::NotInjective: return "NotInjectiveAt";
    case FailureKind::IntersectionFail: return "IntersectionFailAt";
  }
  return "?";
}

const char* to_string(Direction dir) {
  switch (dir) {
    case Direction::None: return "";
    case Direction::Horizontal: return "horizontal";
    case Direction::Vertical: return "vertical";
  }
  return "?";
}

namespace {

std::string bracketed(Degree1 d) { return "(" + std::to_string(d) + ")"; }
std::string bracketed(const Degree2& d) { return to_string(d); }

}  // namespace

template <class Degree>
std::string Failure<Degree>::describe() const {
  std::string s = std::string(to_string(kind)) + " " + bracketed(degree);
  if (direction != Direction::None) s += std::string(" ") + to_string(direction);
  return s;
}

template struct Failure<Degree1>;
template struct Failure<Degree2>;

}  // namespace pmb

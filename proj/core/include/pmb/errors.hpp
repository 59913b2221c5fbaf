#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pmb {

/// Operand shapes are incompatible (matmul, hconcat, module construction).
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegreeOutOfWindow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed input text. `line` is 1-based, 0 when unknown; `field` is a
/// JSON-pointer-like path to the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string field)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// Well-formed input that violates a module invariant (shape, window).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basis handed to `represent` does not pass verification.
class BasisInvalid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pmb

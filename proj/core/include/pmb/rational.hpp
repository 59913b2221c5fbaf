#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pmb {

/// Exact field scalar. mpq_class keeps every value canonical (positive
/// denominator, reduced, zero as 0/1) after each arithmetic operation.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization). The result is
/// canonical, so "2/4" parses to 1/2. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_zero(const Vector& v);

}  // namespace pmb

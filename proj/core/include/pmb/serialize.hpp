#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pmb/module.hpp"
#include "pmb/posetcheck.hpp"

namespace pmb {

struct ParseOptions {
  /// Largest graded dimension accepted; larger values are a ValidationError.
  std::size_t max_dim = 64;
};

/// Parses a module document ("index": "Z" or "Z2"). Throws ParseError for
/// malformed text and ValidationError for shape violations.
Module parse_module(std::string_view text, const ParseOptions& options = {});

/// Compact canonical JSON followed by a newline. parse_module inverts it
/// byte for byte.
std::string serialize(const Module1D& m);
std::string serialize(const Module2D& m);
std::string serialize(const Module& m);

/// Degrees decide the flavour: integers for 1D, [i, j] pairs for 2D. An
/// empty element list parses as a 1D basis.
AnyBasis parse_basis(std::string_view text);
std::string serialize(const Basis1D& b);
std::string serialize(const Basis2D& b);

SupportDescriptor parse_support(std::string_view text);
std::string serialize(const SupportDescriptor& desc);

}  // namespace pmb

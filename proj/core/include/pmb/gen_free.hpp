#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "pmb/module.hpp"

namespace pmb {

/// Pseudorandom invertible n x n matrix: numerators uniform in [-9, 9],
/// denominators in [1, 9], resampled until invertible. The draw uses raw
/// mt19937_64 output so it is identical across standard libraries.
Matrix random_invertible(std::size_t n, std::mt19937_64& rng);

/// Free module on the given generators (repeat a degree for multiplicity),
/// with every graded piece conjugated by a random invertible matrix.
/// Deterministic in `seed`. Throws std::invalid_argument when a generator
/// lies outside the window.
Module1D gen_free(std::uint64_t seed, const Window1D& window, std::span<const Degree1> generators);
Module2D gen_free(std::uint64_t seed, const Window2D& window, std::span<const Degree2> generators);

}  // namespace pmb

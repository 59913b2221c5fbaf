#include "pmb/gen_free.hpp"

#include <stdexcept>
#include <vector>

#include "pmb/rref.hpp"

namespace pmb {

Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix p(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = static_cast<long>(rng() % 9) + 1;
        p(r, c) = Rational(mpz_class(num), mpz_class(den));
        p(r, c).canonicalize();
      }
    }
    if (rank(p) == n) return p;
  }
}

namespace {

/// Positions (in generator order) of the generators lying below `d`.
template <class Degree>
std::vector<std::size_t> generators_below(std::span<const Degree> gens, const Degree& d) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (leq(gens[g], d)) out.push_back(g);
  }
  return out;
}

/// Coordinate inclusion between the free pieces at `from` and `to`.
Matrix inclusion(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
  Matrix f(to.size(), from.size());
  std::size_t r = 0;
  for (std::size_t c = 0; c < from.size(); ++c) {
    while (to[r] != from[c]) ++r;
    f(r, c) = 1;
  }
  return f;
}

}  // namespace

Module1D gen_free(std::uint64_t seed, const Window1D& window, std::span<const Degree1> generators) {
  if (window.alpha > window.beta) throw std::invalid_argument("gen_free: empty window");
  for (auto g : generators) {
    if (!window.contains(g)) throw std::invalid_argument("gen_free: generator " + to_string(g) + " outside window");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> below;
  std::vector<std::size_t> dims;
  std::vector<Matrix> change;  // P_d
  std::vector<Matrix> change_inv;
  for (auto d = window.alpha; d <= window.beta; ++d) {
    below.push_back(generators_below(generators, d));
    dims.push_back(below.back().size());
    change.push_back(random_invertible(dims.back(), rng));
    change_inv.push_back(inverse(change.back()));
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
    maps.push_back(change[k + 1] * inclusion(below[k], below[k + 1]) * change_inv[k]);
  }
  return Module1D(window, std::move(dims), std::move(maps));
}

Module2D gen_free(std::uint64_t seed, const Window2D& window, std::span<const Degree2> generators) {
  if (window.alpha > window.beta || window.gamma > window.delta) {
    throw std::invalid_argument("gen_free: empty window");
  }
  for (const auto& g : generators) {
    if (!window.contains(g)) throw std::invalid_argument("gen_free: generator " + to_string(g) + " outside window");
  }
  std::mt19937_64 rng(seed);
  std::map<Degree2, std::vector<std::size_t>> below;
  std::map<Degree2, Matrix> change;
  std::map<Degree2, Matrix> change_inv;
  Module2D::Grid dims(window.width(), std::vector<std::size_t>(window.height()));
  for (const Degree2& d : window.degrees()) {
    below[d] = generators_below(generators, d);
    const std::size_t n = below[d].size();
    dims[static_cast<std::size_t>(d.i - window.alpha)][static_cast<std::size_t>(d.j - window.gamma)] = n;
    change[d] = random_invertible(n, rng);
    change_inv[d] = inverse(change[d]);
  }
  std::map<Degree2, Matrix> hmaps;
  std::map<Degree2, Matrix> vmaps;
  for (const Degree2& d : window.degrees()) {
    if (d.i < window.beta) {
      const Degree2 t{d.i + 1, d.j};
      hmaps[d] = change[t] * inclusion(below[d], below[t]) * change_inv[d];
    }
    if (d.j < window.delta) {
      const Degree2 t{d.i, d.j + 1};
      vmaps[d] = change[t] * inclusion(below[d], below[t]) * change_inv[d];
    }
  }
  return Module2D(window, std::move(dims), std::move(hmaps), std::move(vmaps));
}

}  // namespace pmb

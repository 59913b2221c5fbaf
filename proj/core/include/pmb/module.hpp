#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pmb/matrix.hpp"

namespace pmb {

using Degree1 = std::int64_t;

/// A bidegree (i, j). The defaulted ordering is lexicographic and is only
/// used for sorting and map keys; the poset order is `leq`.
struct Degree2 {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const Degree2&, const Degree2&) = default;
};

inline bool leq(Degree1 a, Degree1 b) { return a <= b; }
inline bool leq(const Degree2& a, const Degree2& b) { return a.i <= b.i && a.j <= b.j; }

std::string to_string(const Degree2& d);  // "(i,j)"
std::string to_string(Degree1 d);         // "i"

struct Window1D {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  std::size_t length() const { return static_cast<std::size_t>(beta - alpha + 1); }
  bool contains(Degree1 d) const { return alpha <= d && d <= beta; }
  friend bool operator==(const Window1D&, const Window1D&) = default;
};

struct Window2D {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 0;

  std::size_t width() const { return static_cast<std::size_t>(beta - alpha + 1); }
  std::size_t height() const { return static_cast<std::size_t>(delta - gamma + 1); }
  std::size_t cells() const { return width() * height(); }
  bool contains(const Degree2& d) const {
    return alpha <= d.i && d.i <= beta && gamma <= d.j && d.j <= delta;
  }
  Degree2 minimum() const { return {alpha, gamma}; }
  /// All window degrees, i outer and j inner.
  std::vector<Degree2> degrees() const;
  friend bool operator==(const Window2D&, const Window2D&) = default;
};

/// A Z-indexed module on the closed window [alpha, beta]. The map A_i sends
/// M_i to M_{i+1} for alpha <= i < beta. Below alpha the module is zero;
/// from beta on the structure maps are taken to be identities.
class Module1D {
 public:
  /// Throws ValidationError naming the offending index on any shape or window
  /// violation.
  Module1D(Window1D window, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  const Window1D& window() const noexcept { return window_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  std::size_t dim(Degree1 d) const;
  /// A_i : M_i -> M_{i+1}, alpha <= i < beta.
  const Matrix& map(Degree1 i) const;
  std::size_t max_dim() const;

  /// f_{from,to} = A_{to-1} ... A_from; identity when from == to.
  Matrix composite_map(Degree1 from, Degree1 to) const;

  friend bool operator==(const Module1D&, const Module1D&) = default;

 private:
  Window1D window_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

/// A Z^2-indexed module on the rectangle [alpha, beta] x [gamma, delta].
/// Horizontal maps H at (i,j) send M_{i,j} to M_{i+1,j} (i < beta); vertical
/// maps V at (i,j) send M_{i,j} to M_{i,j+1} (j < delta). The module vanishes
/// left of alpha and below gamma and stabilizes by isomorphisms beyond.
class Module2D {
 public:
  using Grid = std::vector<std::vector<std::size_t>>;  // dims[i - alpha][j - gamma]

  /// Every interior edge must have exactly one map; throws ValidationError on
  /// missing, extra, or misshapen maps.
  Module2D(Window2D window, Grid dims, std::map<Degree2, Matrix> hmaps,
           std::map<Degree2, Matrix> vmaps);

  const Window2D& window() const noexcept { return window_; }
  const Grid& dims() const noexcept { return dims_; }

  std::size_t dim(const Degree2& d) const;
  /// Horizontal map out of `source`; requires source.i < beta.
  const Matrix& hmap(const Degree2& source) const;
  /// Vertical map out of `source`; requires source.j < delta.
  const Matrix& vmap(const Degree2& source) const;
  std::size_t max_dim() const;

  const std::map<Degree2, Matrix>& hmaps() const noexcept { return hmaps_; }
  const std::map<Degree2, Matrix>& vmaps() const noexcept { return vmaps_; }

  /// Product of horizontal maps along row from.j, then vertical maps along
  /// column to.i. Agrees with every other monotone path when the module
  /// commutes. Throws DegreeOutOfWindow unless both degrees lie in the window
  /// and from <= to.
  Matrix composite_map(const Degree2& from, const Degree2& to) const;

  friend bool operator==(const Module2D&, const Module2D&) = default;

 private:
  Window2D window_;
  Grid dims_;
  std::map<Degree2, Matrix> hmaps_;
  std::map<Degree2, Matrix> vmaps_;
};

using Module = std::variant<Module1D, Module2D>;

/// A homogeneous element: a coordinate vector in M_degree.
template <class Degree>
struct Element {
  Degree degree{};
  Vector vector;

  friend bool operator==(const Element&, const Element&) = default;
};

template <class Degree>
struct GradedBasis {
  std::vector<Element<Degree>> elements;

  std::size_t count_at(const Degree& d) const {
    std::size_t n = 0;
    for (const auto& e : elements) n += (e.degree == d) ? 1 : 0;
    return n;
  }
  std::size_t size() const noexcept { return elements.size(); }

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;
};

using Basis1D = GradedBasis<Degree1>;
using Basis2D = GradedBasis<Degree2>;
using AnyBasis = std::variant<Basis1D, Basis2D>;

}  // namespace pmb

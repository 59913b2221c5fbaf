#include "pmb/module.hpp"

#include <algorithm>
#include <string>

#include "pmb/errors.hpp"

namespace pmb {

std::string to_string(const Degree2& d) {
  return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + ")";
}

std::string to_string(Degree1 d) { return std::to_string(d); }

std::vector<Degree2> Window2D::degrees() const {
  std::vector<Degree2> out;
  out.reserve(cells());
  for (auto i = alpha; i <= beta; ++i) {
    for (auto j = gamma; j <= delta; ++j) out.push_back({i, j});
  }
  return out;
}

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void expect_shape(const Matrix& a, std::size_t rows, std::size_t cols, const std::string& where) {
  if (a.rows() != rows || a.cols() != cols) {
    throw ValidationError(where + ": expected " + shape(rows, cols) + ", got " + shape(a.rows(), a.cols()));
  }
}

}  // namespace

Module1D::Module1D(Window1D window, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : window_(window), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (window_.alpha > window_.beta) {
    throw ValidationError("window: alpha " + std::to_string(window_.alpha) + " > beta " +
                          std::to_string(window_.beta));
  }
  const std::size_t n = window_.length();
  if (dims_.size() != n) {
    throw ValidationError("dims: expected " + std::to_string(n) + " entries, got " + std::to_string(dims_.size()));
  }
  if (maps_.size() != n - 1) {
    throw ValidationError("maps: expected " + std::to_string(n - 1) + " matrices, got " +
                          std::to_string(maps_.size()));
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    expect_shape(maps_[k], dims_[k + 1], dims_[k], "maps[" + std::to_string(k) + "]");
  }
}

std::size_t Module1D::dim(Degree1 d) const {
  if (!window_.contains(d)) throw DegreeOutOfWindow("degree " + std::to_string(d) + " outside window");
  return dims_[static_cast<std::size_t>(d - window_.alpha)];
}

const Matrix& Module1D::map(Degree1 i) const {
  if (i < window_.alpha || i >= window_.beta) {
    throw DegreeOutOfWindow("no stored map out of degree " + std::to_string(i));
  }
  return maps_[static_cast<std::size_t>(i - window_.alpha)];
}

std::size_t Module1D::max_dim() const {
  return dims_.empty() ? 0 : *std::max_element(dims_.begin(), dims_.end());
}

Matrix Module1D::composite_map(Degree1 from, Degree1 to) const {
  if (!window_.contains(from) || !window_.contains(to) || from > to) {
    throw DegreeOutOfWindow("composite " + std::to_string(from) + " -> " + std::to_string(to));
  }
  Matrix acc = identity(dim(from));
  for (auto i = from; i < to; ++i) acc = map(i) * acc;
  return acc;
}

Module2D::Module2D(Window2D window, Grid dims, std::map<Degree2, Matrix> hmaps,
                   std::map<Degree2, Matrix> vmaps)
    : window_(window), dims_(std::move(dims)), hmaps_(std::move(hmaps)), vmaps_(std::move(vmaps)) {
  if (window_.alpha > window_.beta || window_.gamma > window_.delta) {
    throw ValidationError("window: require alpha <= beta and gamma <= delta");
  }
  if (dims_.size() != window_.width()) {
    throw ValidationError("dims: expected " + std::to_string(window_.width()) + " columns, got " +
                          std::to_string(dims_.size()));
  }
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (dims_[a].size() != window_.height()) {
      throw ValidationError("dims[" + std::to_string(a) + "]: expected " + std::to_string(window_.height()) +
                            " entries, got " + std::to_string(dims_[a].size()));
    }
  }
  for (const auto& [d, _] : hmaps_) {
    if (!window_.contains(d) || d.i == window_.beta) {
      throw ValidationError("hmaps" + to_string(d) + ": no horizontal edge out of this degree in the window");
    }
  }
  for (const auto& [d, _] : vmaps_) {
    if (!window_.contains(d) || d.j == window_.delta) {
      throw ValidationError("vmaps" + to_string(d) + ": no vertical edge out of this degree in the window");
    }
  }
  for (const Degree2& d : window_.degrees()) {
    if (d.i < window_.beta) {
      auto it = hmaps_.find(d);
      if (it == hmaps_.end()) throw ValidationError("hmaps" + to_string(d) + ": missing");
      expect_shape(it->second, dim({d.i + 1, d.j}), dim(d), "hmaps" + to_string(d));
    }
    if (d.j < window_.delta) {
      auto it = vmaps_.find(d);
      if (it == vmaps_.end()) throw ValidationError("vmaps" + to_string(d) + ": missing");
      expect_shape(it->second, dim({d.i, d.j + 1}), dim(d), "vmaps" + to_string(d));
    }
  }
}

std::size_t Module2D::dim(const Degree2& d) const {
  if (!window_.contains(d)) throw DegreeOutOfWindow("degree " + to_string(d) + " outside window");
  return dims_[static_cast<std::size_t>(d.i - window_.alpha)][static_cast<std::size_t>(d.j - window_.gamma)];
}

const Matrix& Module2D::hmap(const Degree2& source) const {
  auto it = hmaps_.find(source);
  if (it == hmaps_.end()) throw DegreeOutOfWindow("no horizontal map out of " + to_string(source));
  return it->second;
}

const Matrix& Module2D::vmap(const Degree2& source) const {
  auto it = vmaps_.find(source);
  if (it == vmaps_.end()) throw DegreeOutOfWindow("no vertical map out of " + to_string(source));
  return it->second;
}

std::size_t Module2D::max_dim() const {
  std::size_t best = 0;
  for (const auto& col : dims_) {
    for (auto d : col) best = std::max(best, d);
  }
  return best;
}

Matrix Module2D::composite_map(const Degree2& from, const Degree2& to) const {
  if (!window_.contains(from) || !window_.contains(to) || !leq(from, to)) {
    throw DegreeOutOfWindow("composite " + to_string(from) + " -> " + to_string(to));
  }
  Matrix acc = identity(dim(from));
  for (auto i = from.i; i < to.i; ++i) acc = hmap({i, from.j}) * acc;
  for (auto j = from.j; j < to.j; ++j) acc = vmap({to.i, j}) * acc;
  return acc;
}

}  // namespace pmb

#include "pmb/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "pmb/errors.hpp"

namespace pmb {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what, 0, field);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError("line " + std::to_string(line) + ": " + e.what(), line, "");
  }
}

const json& child(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "missing");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    fail(path, "integer out of range");
  }
  return v.get<std::int64_t>();
}

std::size_t as_dim(const json& v, const std::string& path, const ParseOptions& opt) {
  const auto d = as_int(v, path);
  if (d < 0) fail(path, "dimension must be non-negative");
  if (static_cast<std::uint64_t>(d) > opt.max_dim) {
    throw ValidationError(path + ": dimension " + std::to_string(d) + " exceeds the limit " +
                          std::to_string(opt.max_dim));
  }
  return static_cast<std::size_t>(d);
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(mpz_class(std::to_string(as_int(v, path))));
  if (!v.is_string()) fail(path, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

/// Array of rows. A zero-row matrix carries no column count, so the caller
/// supplies the column count implied by the dims.
Matrix as_matrix(const json& v, const std::string& path, std::size_t expected_cols) {
  const json& rows = as_array(v, path);
  if (rows.empty()) return Matrix(0, expected_cols);
  const std::size_t cols = as_array(rows[0], path + "/0").size();
  std::vector<Rational> data;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    const json& row = as_array(rows[r], rp);
    if (row.size() != cols) {
      throw ValidationError(rp + ": row has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) data.push_back(as_rational(row[c], rp + "/" + std::to_string(c)));
  }
  return Matrix(rows.size(), cols, std::move(data));
}

std::string degree_key(const Degree2& d) { return std::to_string(d.i) + "," + std::to_string(d.j); }

Degree2 parse_key(const std::string& key, const std::string& path) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) fail(path, "expected a key of the form \"i,j\"");
  try {
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    const std::string si = key.substr(0, comma);
    const std::string sj = key.substr(comma + 1);
    Degree2 d{std::stoll(si, &used_i), std::stoll(sj, &used_j)};
    if (used_i != si.size() || used_j != sj.size()) throw std::invalid_argument(key);
    return d;
  } catch (const std::logic_error&) {
    fail(path, "expected a key of the form \"i,j\"");
  }
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string finish(const ordered_json& doc) { return doc.dump() + "\n"; }

Module1D parse_1d(const json& doc, const ParseOptions& opt) {
  const json& win = child(doc, "window", "");
  Window1D w{as_int(child(win, "alpha", "/window"), "/window/alpha"),
             as_int(child(win, "beta", "/window"), "/window/beta")};
  if (w.alpha > w.beta) throw ValidationError("/window: alpha > beta");
  const json& jd = as_array(child(doc, "dims", ""), "/dims");
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < jd.size(); ++k) dims.push_back(as_dim(jd[k], "/dims/" + std::to_string(k), opt));
  if (dims.size() != w.length()) {
    throw ValidationError("/dims: expected " + std::to_string(w.length()) + " entries, got " +
                          std::to_string(dims.size()));
  }
  const json& jm = as_array(child(doc, "maps", ""), "/maps");
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < jm.size(); ++k) {
    maps.push_back(as_matrix(jm[k], "/maps/" + std::to_string(k), k < dims.size() ? dims[k] : 0));
  }
  return Module1D(w, std::move(dims), std::move(maps));
}

std::map<Degree2, Matrix> parse_edge_maps(const json& obj, const std::string& path, const Window2D& w,
                                          const Module2D::Grid& dims) {
  if (!obj.is_object()) fail(path, "expected an object keyed by \"i,j\"");
  std::map<Degree2, Matrix> out;
  for (const auto& [key, value] : obj.items()) {
    const std::string kp = path + "/" + key;
    const Degree2 d = parse_key(key, kp);
    std::size_t cols = 0;
    if (w.contains(d)) cols = dims[static_cast<std::size_t>(d.i - w.alpha)][static_cast<std::size_t>(d.j - w.gamma)];
    out.emplace(d, as_matrix(value, kp, cols));
  }
  return out;
}

Module2D parse_2d(const json& doc, const ParseOptions& opt) {
  const json& win = child(doc, "window", "");
  Window2D w{as_int(child(win, "alpha", "/window"), "/window/alpha"),
             as_int(child(win, "beta", "/window"), "/window/beta"),
             as_int(child(win, "gamma", "/window"), "/window/gamma"),
             as_int(child(win, "delta", "/window"), "/window/delta")};
  if (w.alpha > w.beta || w.gamma > w.delta) throw ValidationError("/window: require alpha <= beta, gamma <= delta");
  const json& jd = as_array(child(doc, "dims", ""), "/dims");
  if (jd.size() != w.width()) {
    throw ValidationError("/dims: expected " + std::to_string(w.width()) + " columns, got " + std::to_string(jd.size()));
  }
  Module2D::Grid dims;
  for (std::size_t a = 0; a < jd.size(); ++a) {
    const std::string cp = "/dims/" + std::to_string(a);
    const json& col = as_array(jd[a], cp);
    if (col.size() != w.height()) {
      throw ValidationError(cp + ": expected " + std::to_string(w.height()) + " entries, got " +
                            std::to_string(col.size()));
    }
    std::vector<std::size_t> c;
    for (std::size_t b = 0; b < col.size(); ++b) c.push_back(as_dim(col[b], cp + "/" + std::to_string(b), opt));
    dims.push_back(std::move(c));
  }
  auto hmaps = parse_edge_maps(child(doc, "hmaps", ""), "/hmaps", w, dims);
  auto vmaps = parse_edge_maps(child(doc, "vmaps", ""), "/vmaps", w, dims);
  return Module2D(w, std::move(dims), std::move(hmaps), std::move(vmaps));
}

}  // namespace

Module parse_module(std::string_view text, const ParseOptions& options) {
  const json doc = parse_text(text);
  const json& index = child(doc, "index", "");
  if (index == "Z") return parse_1d(doc, options);
  if (index == "Z2") return parse_2d(doc, options);
  fail("/index", "expected \"Z\" or \"Z2\"");
}

std::string serialize(const Module1D& m) {
  ordered_json doc;
  doc["index"] = "Z";
  doc["window"] = {{"alpha", m.window().alpha}, {"beta", m.window().beta}};
  doc["dims"] = m.dims();
  ordered_json maps = ordered_json::array();
  for (const auto& a : m.maps()) maps.push_back(matrix_json(a));
  doc["maps"] = std::move(maps);
  return finish(doc);
}

std::string serialize(const Module2D& m) {
  const Window2D& w = m.window();
  ordered_json doc;
  doc["index"] = "Z2";
  doc["window"] = {{"alpha", w.alpha}, {"beta", w.beta}, {"gamma", w.gamma}, {"delta", w.delta}};
  doc["dims"] = m.dims();
  ordered_json h = ordered_json::object();
  ordered_json v = ordered_json::object();
  for (const Degree2& d : w.degrees()) {
    if (d.i < w.beta) h[degree_key(d)] = matrix_json(m.hmap(d));
    if (d.j < w.delta) v[degree_key(d)] = matrix_json(m.vmap(d));
  }
  doc["hmaps"] = std::move(h);
  doc["vmaps"] = std::move(v);
  return finish(doc);
}

std::string serialize(const Module& m) {
  return std::visit([](const auto& mod) { return serialize(mod); }, m);
}

AnyBasis parse_basis(std::string_view text) {
  const json doc = parse_text(text);
  const json& elems = as_array(child(doc, "elements", ""), "/elements");
  Basis1D b1;
  Basis2D b2;
  bool two_d = false;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const std::string ep = "/elements/" + std::to_string(k);
    const json& deg = child(elems[k], "degree", ep);
    const json& vec = as_array(child(elems[k], "vector", ep), ep + "/vector");
    Vector v;
    for (std::size_t c = 0; c < vec.size(); ++c) v.push_back(as_rational(vec[c], ep + "/vector/" + std::to_string(c)));
    const bool is_pair = deg.is_array();
    if (k == 0) two_d = is_pair;
    if (is_pair != two_d) fail(ep + "/degree", "mixed 1D and 2D degrees");
    if (is_pair) {
      if (deg.size() != 2) fail(ep + "/degree", "expected [i, j]");
      b2.elements.push_back({{as_int(deg[0], ep + "/degree/0"), as_int(deg[1], ep + "/degree/1")}, std::move(v)});
    } else {
      b1.elements.push_back({as_int(deg, ep + "/degree"), std::move(v)});
    }
  }
  if (two_d) return b2;
  return b1;
}

std::string serialize(const Basis1D& b) {
  ordered_json elems = ordered_json::array();
  for (const auto& e : b.elements) elems.push_back({{"degree", e.degree}, {"vector", vector_json(e.vector)}});
  ordered_json doc;
  doc["elements"] = std::move(elems);
  return finish(doc);
}

std::string serialize(const Basis2D& b) {
  ordered_json elems = ordered_json::array();
  for (const auto& e : b.elements) {
    elems.push_back({{"degree", {e.degree.i, e.degree.j}}, {"vector", vector_json(e.vector)}});
  }
  ordered_json doc;
  doc["elements"] = std::move(elems);
  return finish(doc);
}

SupportDescriptor parse_support(std::string_view text) {
  const json doc = parse_text(text);
  const json& comps = as_array(child(doc, "components", ""), "/components");
  if (comps.empty()) fail("/components", "at least one component is required");
  SupportDescriptor desc;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const std::string cp = "/components/" + std::to_string(k);
    const json& kind = child(comps[k], "kind", cp);
    SupportComponent c;
    if (kind == "principal") {
      c.kind = ComponentKind::Principal;
    } else if (kind == "staircase_closed") {
      c.kind = ComponentKind::StaircaseClosed;
    } else if (kind == "staircase_punctured") {
      c.kind = ComponentKind::StaircasePunctured;
    } else {
      fail(cp + "/kind", "expected principal, staircase_closed or staircase_punctured");
    }
    const json& corner = as_array(child(comps[k], "corner", cp), cp + "/corner");
    if (corner.size() != 2) fail(cp + "/corner", "expected [i, j]");
    c.corner = {as_int(corner[0], cp + "/corner/0"), as_int(corner[1], cp + "/corner/1")};
    desc.components.push_back(c);
  }
  return desc;
}

std::string serialize(const SupportDescriptor& desc) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : desc.components) {
    comps.push_back({{"kind", to_string(c.kind)}, {"corner", {c.corner.i, c.corner.j}}});
  }
  ordered_json doc;
  doc["components"] = std::move(comps);
  return finish(doc);
}

}  // namespace pmb

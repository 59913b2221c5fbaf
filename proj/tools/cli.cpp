#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pmb/basis1d.hpp"
#include "pmb/basis2d.hpp"
#include "pmb/errors.hpp"
#include "pmb/gen_free.hpp"
#include "pmb/oracle.hpp"
#include "pmb/posetcheck.hpp"
#include "pmb/serialize.hpp"

namespace pmb::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Text, Json };

/// Raised for bad flags that CLI11 cannot see (window syntax, generator list).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for unreadable or unwritable files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::size_t max_dim_from_env() {
  const char* raw = std::getenv("PMB_MAX_DIM");
  if (raw == nullptr || *raw == '\0') return 64;
  const std::string s(raw);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw UsageError("PMB_MAX_DIM must be a non-negative integer, got '" + s + "'");
  }
  return std::stoull(s);
}

Module load_module(const std::string& path) {
  ParseOptions opt;
  opt.max_dim = max_dim_from_env();
  return parse_module(read_file(path), opt);
}

ojson degree_json(Degree1 d) { return d; }
ojson degree_json(const Degree2& d) { return ojson::array({d.i, d.j}); }

std::string degree_text(Degree1 d) { return std::to_string(d); }
std::string degree_text(const Degree2& d) { return to_string(d); }

template <class Degree>
ojson failure_json(const std::optional<Failure<Degree>>& f) {
  if (!f) return nullptr;
  ojson j;
  j["kind"] = to_string(f->kind);
  j["degree"] = degree_json(f->degree);
  j["direction"] = f->direction == Direction::None ? ojson(nullptr) : ojson(to_string(f->direction));
  j["rank"] = f->rank;
  j["expected"] = f->expected;
  j["message"] = f->describe();
  return j;
}

template <class Degree>
std::string failure_text(const Failure<Degree>& f) {
  std::string s = f.describe();
  if (f.kind != FailureKind::NotCommutative) {
    s += ": rank " + std::to_string(f.rank) + ", expected " + std::to_string(f.expected);
  }
  return s;
}

std::string window_text(const Module1D& m) {
  return "[" + std::to_string(m.window().alpha) + "," + std::to_string(m.window().beta) + "]";
}

std::string window_text(const Module2D& m) {
  const Window2D& w = m.window();
  return "[" + std::to_string(w.alpha) + "," + std::to_string(w.beta) + "]x[" + std::to_string(w.gamma) + "," +
         std::to_string(w.delta) + "]";
}

const char* index_name(const Module1D&) { return "Z"; }
const char* index_name(const Module2D&) { return "Z2"; }

// ---------------------------------------------------------------- check

template <class Degree>
int emit_check(const char* index, const std::string& window, const std::vector<CriteriaReport<Degree>>& reports,
               Format fmt, std::ostream& out) {
  std::optional<Failure<Degree>> first;
  for (const auto& r : reports) {
    if (!first && r.first_failure) first = r.first_failure;
  }
  if (fmt == Format::Json) {
    ojson doc;
    doc["index"] = index;
    doc["pass"] = !first.has_value();
    ojson checks = ojson::array();
    for (const auto& r : reports) {
      checks.push_back({{"name", r.check},
                        {"pass", r.pass},
                        {"reliable", r.reliable},
                        {"failure", failure_json(r.first_failure)},
                        {"notes", r.notes}});
    }
    doc["checks"] = std::move(checks);
    doc["failure"] = failure_json(first);
    out << doc.dump() << "\n";
  } else {
    out << "index: " << index << "\n";
    out << "window: " << window << "\n";
    for (const auto& r : reports) {
      out << r.check << ": ";
      if (r.pass) {
        out << "pass";
      } else {
        out << "FAIL " << failure_text(*r.first_failure);
      }
      if (!r.reliable) out << " (unreliable)";
      out << "\n";
      for (const auto& n : r.notes) out << "  note: " << n << "\n";
    }
    out << "result: " << (first ? "FAIL " + first->describe() : std::string("pass")) << "\n";
  }
  return first ? kMathFailure : kOk;
}

int cmd_check(const std::string& path, Format fmt, std::ostream& out) {
  const Module mod = load_module(path);
  if (const auto* m1 = std::get_if<Module1D>(&mod)) {
    return emit_check<Degree1>("Z", window_text(*m1), {check_criteria_1d(*m1)}, fmt, out);
  }
  const auto& m2 = std::get<Module2D>(mod);
  const auto reports = check_criteria_2d(m2);
  return emit_check<Degree2>("Z2", window_text(m2), {reports.begin(), reports.end()}, fmt, out);
}

// ---------------------------------------------------------------- basis

template <class Mod, class Basis>
std::string counts_text(const Mod& m, const Basis& basis) {
  std::string s;
  for (const auto& [d, b] : betti_table(m)) {
    const std::size_t n = basis.count_at(d);
    if (n == 0) continue;
    if (!s.empty()) s += ' ';
    s += degree_text(d) + ":" + std::to_string(n);
  }
  return s;
}

template <class Mod, class Basis>
ojson counts_json(const Mod& m, const Basis& basis) {
  ojson arr = ojson::array();
  for (const auto& [d, b] : betti_table(m)) {
    const std::size_t n = basis.count_at(d);
    if (n != 0) arr.push_back({{"degree", degree_json(d)}, {"count", n}});
  }
  return arr;
}

template <class Mod, class Compute>
int emit_basis(const Mod& m, Compute compute, const std::string& out_path, Format fmt, std::ostream& out) {
  using Degree = std::decay_t<decltype(compute(m, nullptr).elements.front().degree)>;
  OpCount ops;
  try {
    const auto basis = compute(m, &ops);
    const std::string doc = serialize(basis);
    if (!out_path.empty()) write_file(out_path, doc);
    if (fmt == Format::Json) {
      ojson j;
      j["index"] = index_name(m);
      j["generators"] = basis.size();
      j["counts"] = counts_json(m, basis);
      j["row_ops"] = ops.row_ops;
      j["entry_ops"] = ops.entry_ops;
      if (out_path.empty()) {
        j["basis"] = ojson::parse(doc);
      } else {
        j["out"] = out_path;
      }
      out << j.dump() << "\n";
    } else {
      out << "generators: " << basis.size() << "\n";
      out << "counts: " << counts_text(m, basis) << "\n";
      out << "row_ops: " << ops.row_ops << "\n";
      out << "entry_ops: " << ops.entry_ops << "\n";
      if (out_path.empty()) {
        out << doc;
      } else {
        out << "wrote: " << out_path << "\n";
      }
    }
    return kOk;
  } catch (const FreenessError<Degree>& e) {
    if (fmt == Format::Json) {
      ojson j;
      j["index"] = index_name(m);
      j["failure"] = failure_json(std::optional<Failure<Degree>>(e.failure()));
      out << j.dump() << "\n";
    } else {
      out << "FAIL " << failure_text(e.failure()) << "\n";
    }
    return kMathFailure;
  }
}

int cmd_basis(const std::string& path, const std::string& out_path, Format fmt, std::ostream& out) {
  const Module mod = load_module(path);
  if (const auto* m1 = std::get_if<Module1D>(&mod)) {
    return emit_basis(*m1, [](const Module1D& m, OpCount* ops) { return compute_basis_1d(m, ops); }, out_path, fmt,
                      out);
  }
  return emit_basis(std::get<Module2D>(mod),
                    [](const Module2D& m, OpCount* ops) { return compute_basis_2d(m, ops); }, out_path, fmt, out);
}

// ---------------------------------------------------------------- verify

template <class Degree>
int emit_verify(const VerifyOutcome<Degree>& v, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    ojson j;
    j["pass"] = v.ok;
    j["degree"] = v.failing_degree ? degree_json(*v.failing_degree) : ojson(nullptr);
    j["reason"] = v.reason;
    out << j.dump() << "\n";
  } else if (v.ok) {
    out << "verify: pass\n";
  } else {
    out << "verify: FAIL at " << (v.failing_degree ? degree_text(*v.failing_degree) : std::string("?")) << ": "
        << v.reason << "\n";
  }
  return v.ok ? kOk : kMathFailure;
}

int cmd_verify(const std::string& module_path, const std::string& basis_path, Format fmt, std::ostream& out) {
  const Module mod = load_module(module_path);
  AnyBasis basis = parse_basis(read_file(basis_path));
  if (const auto* m1 = std::get_if<Module1D>(&mod)) {
    if (const auto* b1 = std::get_if<Basis1D>(&basis)) return emit_verify(verify_basis_detail(*m1, *b1), fmt, out);
    return emit_verify(VerifyOutcome<Degree1>{false, std::nullopt, "basis has 2D degrees, module is Z-indexed"}, fmt,
                       out);
  }
  const auto& m2 = std::get<Module2D>(mod);
  if (const auto* b1 = std::get_if<Basis1D>(&basis)) {
    if (!b1->elements.empty()) {
      return emit_verify(VerifyOutcome<Degree2>{false, std::nullopt, "basis has 1D degrees, module is Z2-indexed"},
                         fmt, out);
    }
    basis = Basis2D{};
  }
  return emit_verify(verify_basis_detail(m2, std::get<Basis2D>(basis)), fmt, out);
}

// ---------------------------------------------------------------- gen

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::logic_error&) {
      throw UsageError("bad integer '" + item + "' in " + what);
    }
    if (used != item.size()) throw UsageError("bad integer '" + item + "' in " + what);
  }
  return out;
}

/// "(d1);(d2)*3;..." with d either "i" or "i,j"; "*k" repeats a degree.
std::vector<std::vector<std::int64_t>> parse_gens(const std::string& spec) {
  static const std::regex item_re(R"(^\s*\(([^()]*)\)\s*(?:\*\s*(\d+))?\s*$)");
  std::vector<std::vector<std::int64_t>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    std::smatch match;
    if (!std::regex_match(item, match, item_re)) throw UsageError("bad generator '" + item + "' in --gens");
    const auto degree = parse_int_list(match[1].str(), "--gens");
    const std::size_t times = match[2].matched ? std::stoul(match[2].str()) : 1;
    for (std::size_t k = 0; k < times; ++k) out.push_back(degree);
  }
  return out;
}

int cmd_gen(std::uint64_t seed, const std::string& window_spec, const std::string& gens_spec,
            const std::string& out_path, std::ostream& out) {
  const auto w = parse_int_list(window_spec, "--window");
  const auto gens = parse_gens(gens_spec);
  std::string doc;
  if (w.size() == 2) {
    if (w[0] > w[1]) throw UsageError("--window: alpha > beta");
    std::vector<Degree1> g;
    for (const auto& d : gens) {
      if (d.size() != 1) throw UsageError("--gens: expected single-integer degrees for a Z window");
      g.push_back(d[0]);
    }
    const Window1D win{w[0], w[1]};
    for (auto d : g) {
      if (!win.contains(d)) throw UsageError("--gens: generator (" + std::to_string(d) + ") outside window");
    }
    doc = serialize(gen_free(seed, win, g));
  } else if (w.size() == 4) {
    if (w[0] > w[1] || w[2] > w[3]) throw UsageError("--window: require a <= b and c <= d");
    std::vector<Degree2> g;
    for (const auto& d : gens) {
      if (d.size() != 2) throw UsageError("--gens: expected (i,j) degrees for a Z2 window");
      g.push_back({d[0], d[1]});
    }
    const Window2D win{w[0], w[1], w[2], w[3]};
    for (const auto& d : g) {
      if (!win.contains(d)) throw UsageError("--gens: generator " + to_string(d) + " outside window");
    }
    doc = serialize(gen_free(seed, win, g));
  } else {
    throw UsageError("--window expects a,b or a,b,c,d");
  }
  if (out_path.empty()) {
    out << doc;
  } else {
    write_file(out_path, doc);
  }
  return kOk;
}

// ---------------------------------------------------------------- betti

template <class Mod>
int emit_betti(const Mod& m, Format fmt, std::ostream& out) {
  const auto table = betti_table(m);
  std::size_t total = 0;
  for (const auto& [d, b] : table) total += b;
  if (fmt == Format::Json) {
    ojson rows = ojson::array();
    for (const auto& [d, b] : table) {
      rows.push_back(
          {{"degree", degree_json(d)}, {"dim", m.dim(d)}, {"decomposable", decomposable_dim(m, d)}, {"betti", b}});
    }
    ojson j;
    j["index"] = index_name(m);
    j["table"] = std::move(rows);
    j["total"] = total;
    out << j.dump() << "\n";
  } else {
    out << "degree\tdim\tdecomposable\tbetti\n";
    for (const auto& [d, b] : table) {
      out << degree_text(d) << "\t" << m.dim(d) << "\t" << decomposable_dim(m, d) << "\t" << b << "\n";
    }
    out << "total: " << total << "\n";
  }
  return kOk;
}

int cmd_betti(const std::string& path, Format fmt, std::ostream& out) {
  const Module mod = load_module(path);
  return std::visit([&](const auto& m) { return emit_betti(m, fmt, out); }, mod);
}

// ---------------------------------------------------------------- support

int cmd_support(const std::string& path, Format fmt, std::ostream& out) {
  const SupportDescriptor desc = parse_support(read_file(path));
  const Classification c = classify(desc);
  const auto minimals = minimal_elements(desc);
  if (fmt == Format::Json) {
    ojson mins = ojson::array();
    for (const auto& d : minimals) mins.push_back(degree_json(d));
    ojson j;
    j["flat"] = c.flat;
    j["free_by_construction"] = c.free_by_construction;
    j["not_projective"] = c.not_projective;
    j["witness"] = c.witness ? degree_json(*c.witness) : ojson(nullptr);
    j["minimal_elements"] = std::move(mins);
    j["conclusion"] = to_string(c.conclusion);
    j["notes"] = c.notes;
    out << j.dump() << "\n";
  } else {
    out << "flat: " << (c.flat ? "true" : "false") << "\n";
    out << "free_by_construction: " << (c.free_by_construction ? "true" : "false") << "\n";
    out << "not_projective: " << (c.not_projective ? "true" : "false") << "\n";
    out << "witness: " << (c.witness ? to_string(*c.witness) : std::string("none")) << "\n";
    out << "minimal_elements:";
    if (minimals.empty()) out << " none";
    for (const auto& d : minimals) out << " " << to_string(d);
    out << "\n";
    out << "conclusion: " << to_string(c.conclusion) << "\n";
    for (const auto& n : c.notes) out << "note: " << n << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Freeness checks and homogeneous bases for Z- and Z2-indexed persistence modules", "pmb"};
  app.require_subcommand(1);

  Format fmt = Format::Text;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  std::string path, basis_path, out_path, window_spec, gens_spec;
  std::uint64_t seed = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "Report format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* check = app.add_subcommand("check", "Evaluate the freeness criteria");
  check->add_option("module", path, "Module file")->required();
  add_format(check);

  auto* basis = app.add_subcommand("basis", "Compute a homogeneous basis");
  basis->add_option("module", path, "Module file")->required();
  basis->add_option("--out", out_path, "Write the basis file here");
  add_format(basis);

  auto* verify = app.add_subcommand("verify", "Verify a basis against a module");
  verify->add_option("module", path, "Module file")->required();
  verify->add_option("basis", basis_path, "Basis file")->required();
  add_format(verify);

  auto* gen = app.add_subcommand("gen", "Generate a randomized free module");
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--window", window_spec, "a,b or a,b,c,d")->required();
  gen->add_option("--gens", gens_spec, "Generator degrees, e.g. \"(0,0);(1,1)*2\"")->required();
  gen->add_option("--out", out_path, "Write the module file here");

  auto* betti_cmd = app.add_subcommand("betti", "Print the Betti table");
  betti_cmd->add_option("module", path, "Module file")->required();
  add_format(betti_cmd);

  auto* support = app.add_subcommand("support", "Classify a staircase support descriptor");
  support->add_option("descriptor", path, "Descriptor file")->required();
  add_format(support);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(path, fmt, out);
    if (basis->parsed()) return cmd_basis(path, out_path, fmt, out);
    if (verify->parsed()) return cmd_verify(path, basis_path, fmt, out);
    if (gen->parsed()) return cmd_gen(seed, window_spec, gens_spec, out_path, out);
    if (betti_cmd->parsed()) return cmd_betti(path, fmt, out);
    if (support->parsed()) return cmd_support(path, fmt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}

}  // namespace pmb::cli

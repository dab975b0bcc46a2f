// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nakayama/nakayama.h"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 0x6e616b61;

struct RunConfig {
  std::string command;
  int n = 1;
  int k = 1;
  int j = 1;
  int max_valleys = 1;
  std::string contract;
  std::string u;
  std::string v;
  bool json_output = false;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
};

enum ExitCode { kExitOk = 0, kExitVerification = 1, kExitUsage = 2, kExitInternal = 3 };

std::vector<int> parse_contract(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad component '" + item + "'");
    out.push_back(value);
  }
  return out;
}

std::string cell_text(const json& e) {
  if (e.is_string()) return e.get<std::string>();
  return e.dump();
}

void print_matrix(std::ostream& out, const json& m, const std::string& indent) {
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& e : row) width = std::max(width, cell_text(e).size());
  for (const auto& row : m) {
    out << indent << "[";
    bool first = true;
    for (const auto& e : row) {
      out << (first ? "" : " ") << std::setw(static_cast<int>(width)) << cell_text(e);
      first = false;
    }
    out << "]\n";
  }
}

std::string join(const json& list, const char* sep = ", ") {
  std::string s;
  for (const auto& e : list) s += (s.empty() ? "" : sep) + cell_text(e);
  return s;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void render_algebra(std::ostream& out, const json& r) {
  const auto& base = r.at("base");
  out << "Nakayama algebra, n = " << r.at("n") << ", dimension " << base.at("dimension") << "\n";
  out << "  basis: " << join(base.at("basis")) << "\n";
  const auto& t = r.at("torus");
  out << "torus algebra: dimension " << t.at("dimension") << ", " << t.at("arrows").size() << " arrows, "
      << t.at("relations").size() << " relations\n";
  for (const auto& a : t.at("arrows"))
    out << "  " << cell_text(a.at("name")) << ": " << cell_text(a.at("source")) << " -> " << cell_text(a.at("target"))
        << "\n";
}

void render_catalog(std::ostream& out, const json& r) {
  out << "catalog, n = " << r.at("n") << ", at most " << r.at("max_valleys") << " valleys: " << r.at("members").size()
      << " members\n";
  for (const auto& m : r.at("members")) {
    out << "  " << std::left << std::setw(22) << cell_text(m.at("display")) << std::right << " dim "
        << std::setw(2) << m.at("dimension") << "  " << std::left << std::setw(8) << cell_text(m.at("cell"))
        << std::right << " dims";
    for (const auto& [vertex, d] : m.at("dims").items()) out << " " << vertex << ":" << d;
    out << (m.at("ok").get<bool>() ? "" : "  MISMATCH") << "\n";
  }
}

void render_decomposition(std::ostream& out, const json& r) {
  out << cell_text(r.at("u")) << " (x) " << cell_text(r.at("v")) << ": dimension " << r.at("dimension") << "\n";
  for (const auto& s : r.at("summands"))
    out << "  " << std::left << std::setw(14) << cell_text(s.at("label")) << std::right << " x" << s.at("multiplicity")
        << "  " << cell_text(s.at("cell")) << "\n";
  out << "  residual dimension " << r.at("residual_dim") << "\n";
}

void render_multable(std::ostream& out, const json& r) {
  out << "multiplication table of J_" << r.at("k") << ", n = " << r.at("n") << ": " << r.at("products")
      << " products\n";
  out << "      W  S  N  M\n";
  for (const char* u : {"W", "S", "N", "M"}) {
    out << "  " << u << " ";
    for (const char* v : {"W", "S", "N", "M"}) {
      const auto key = std::string(u) + v;
      out << "  " << (r.at("table").contains(key) ? cell_text(r.at("table").at(key)) : "-");
    }
    out << "\n";
  }
  out << "  mismatches: " << r.at("mismatches").size() << ", products with residual: "
      << r.at("residual_products").size() << "\n";
  for (const auto& m : r.at("mismatches"))
    out << "    " << cell_text(m.at("u")) << " (x) " << cell_text(m.at("v")) << ": expected " << m.at("expected").dump()
        << ", got " << m.at("actual").dump() << "\n";
  out << "  F (x) F = F^(4n) mod greater cells: " << verdict(r.at("f_tensor_f")) << "\n";
  out << "  F_{i|j} (x) F_{j|l} = F_{i|l}^4 mod greater cells: " << verdict(r.at("f_ij_tensor_f_jl")) << "\n";
}

void render_cells(std::ostream& out, const json& r) {
  out << "cells, n = " << r.at("n") << ", at most " << r.at("max_valleys") << " valleys (catalog-relative)\n";
  out << "two-sided cells:\n";
  for (const auto& c : r.at("two_sided_cells"))
    out << "  " << std::left << std::setw(8) << cell_text(c.at("tag")) << std::right << " " << c.at("members").size()
        << " members, " << (c.at("idempotent").get<bool>() ? "idempotent" : "not idempotent") << "\n";
  out << "chain: " << join(r.at("chain"), " >= ") << "\n";
  for (const auto& box : r.at("egg_boxes")) {
    out << "egg-box of " << cell_text(box.at("cell")) << " (columns are left cells, rows are right cells):\n";
    for (const auto& row : box.at("grid")) {
      out << " ";
      for (const auto& entry : row) out << " " << std::left << std::setw(11) << join(entry, "/") << std::right;
      out << "\n";
    }
  }
  const auto& c = r.at("checks");
  out << "egg-boxes " << verdict(c.at("egg_boxes")) << ", chain " << verdict(c.at("chain")) << ", idempotency "
      << verdict(c.at("idempotency")) << ", cell tags " << verdict(c.at("tags")) << "\n";
  for (const auto& f : c.at("failures")) out << "  " << cell_text(f) << "\n";
}

void render_adjunction(std::ostream& out, const json& r) {
  out << "adjunction data, n = " << r.at("n") << ", k = " << r.at("k") << "\n";
  for (const auto& p : r.at("pairs"))
    out << "  S:" << p.at("i") << "|" << p.at("j") << ": left restriction " << join(p.at("restrict_left"), " + ")
        << " " << verdict(p.at("restrict_left_ok")) << "; Hom(-, A) = " << cell_text(p.at("hom_to_algebra")) << " "
        << verdict(p.at("hom_to_algebra_ok")) << "\n";
}

void render_birep(std::ostream& out, const json& r) {
  const int n = r.at("n");
  out << "birepresentation, n = " << n << ", k = " << r.at("k") << ", left cell j = " << r.at("j") << "\n";
  out << "  rank " << r.at("rank") << ", objects " << join(r.at("objects")) << "\n";
  out << "  contracted components: {" << join(r.at("contracted")) << "}\n";
  for (const auto& a : r.at("arrows"))
    out << "  arrow alpha_" << a.at("component") << ": " << cell_text(a.at("source")) << " -> "
        << cell_text(a.at("target")) << "\n";
  if (n <= 4) {
    out << "  Cartan matrix (row x, column y: dim Hom(x, y)):\n";
    print_matrix(out, r.at("cartan"), "    ");
    out << "  [F]:\n";
    print_matrix(out, r.at("total_action"), "    ");
    for (const auto& g : r.at("generators")) {
      out << "  [" << cell_text(g.at("label")) << "]:\n";
      print_matrix(out, g.at("action"), "    ");
    }
  } else {
    out << "  (matrices omitted for n > 4; use --json)\n";
  }
  out << "  simple transitive: " << (r.at("simple_transitive").get<bool>() ? "yes" : "no") << "\n";
  out << "  fingerprint: {" << join(r.at("fingerprint")) << "}\n";
  for (const auto& [name, v] : r.at("verifications").items()) {
    out << "  " << name << ": " << verdict(v.at("ok")) << " (" << v.at("checks") << " checks)\n";
    for (const auto& f : v.at("failures")) out << "    " << cell_text(f) << "\n";
  }
}

void render_classify(std::ostream& out, const json& r) {
  out << "classification, n = " << r.at("n") << ", k = " << r.at("k") << "\n";
  for (const auto& e : r.at("entries"))
    out << "  I = {" << join(e.at("I")) << "}: rank " << e.at("rank") << ", "
        << (e.at("simple_transitive").get<bool>() ? "simple transitive" : "NOT simple transitive") << ", fingerprint {"
        << join(e.at("fingerprint")) << "}\n";
  out << "  counts by rank:";
  for (const auto& [rank, count] : r.at("counts").items()) out << " " << rank << ":" << count;
  out << "\n  fingerprints distinct: " << (r.at("fingerprints_distinct").get<bool>() ? "yes" : "no") << "\n";
  out << "  matches binomial counts: " << verdict(r.at("matches_expected")) << "\n";
}

std::filesystem::path output_path(const std::string& output) {
  std::filesystem::path p(output);
  if (p.is_relative()) {
    if (const char* base = std::getenv("NAKAYAMA_OUTPUT_DIR"); base && *base) p = std::filesystem::path(base) / p;
  }
  return p;
}

class Context {
 public:
  explicit Context(std::uint64_t seed) {
    if (nkb_context_create(seed, &ctx_) != NKB_OK) throw std::runtime_error("cannot create context");
  }
  ~Context() { nkb_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  nkb_context* get() const { return ctx_; }

 private:
  nkb_context* ctx_ = nullptr;
};

int run(const RunConfig& config) {
  Context ctx(config.seed);
  char* raw = nullptr;
  nkb_status status = NKB_ERR_INVALID_ARGUMENT;
  void (*render)(std::ostream&, const json&) = nullptr;
  const auto& c = config.command;
  if (c == "algebra") {
    status = nkb_algebra_report(ctx.get(), config.n, &raw);
    render = render_algebra;
  } else if (c == "catalog") {
    status = nkb_catalog_report(ctx.get(), config.n, config.max_valleys, &raw);
    render = render_catalog;
  } else if (c == "tensor") {
    status = nkb_tensor_report(ctx.get(), config.n, config.u.c_str(), config.v.c_str(), &raw);
    render = render_decomposition;
  } else if (c == "multable") {
    status = nkb_multable_report(ctx.get(), config.n, config.k, &raw);
    render = render_multable;
  } else if (c == "cells") {
    status = nkb_cells_report(ctx.get(), config.n, config.max_valleys, &raw);
    render = render_cells;
  } else if (c == "adjunction") {
    status = nkb_adjunction_report(ctx.get(), config.n, config.k, &raw);
    render = render_adjunction;
  } else if (c == "cellrep") {
    status = nkb_cellrep_report(ctx.get(), config.n, config.k, config.j, &raw);
    render = render_birep;
  } else if (c == "localize") {
    const auto contract = parse_contract(config.contract);
    status = nkb_localize_report(ctx.get(), config.n, config.k, config.j, contract.data(), contract.size(), &raw);
    render = render_birep;
  } else if (c == "classify") {
    status = nkb_classify_report(ctx.get(), config.n, config.k, &raw);
    render = render_classify;
  }
  if (status != NKB_OK && status != NKB_ERR_VERIFICATION) {
    std::cerr << "error: " << nkb_status_name(status) << ": " << nkb_last_error(ctx.get()) << "\n";
    if (raw) nkb_string_free(raw);
    return status == NKB_ERR_INVALID_ARGUMENT ? kExitUsage : kExitInternal;
  }
  const json report = json::parse(raw);
  nkb_string_free(raw);

  if (!config.output.empty()) {
    const auto path = output_path(config.output);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path);
    if (!file) {
      std::cerr << "error: cannot write " << path << "\n";
      return kExitInternal;
    }
    file << report.dump(2) << "\n";
  }
  if (config.json_output) {
    if (config.output.empty()) std::cout << report.dump(2) << "\n";
  } else {
    render(std::cout, report);
  }
  return status == NKB_OK ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with bimodules over the cyclic Nakayama algebra"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "number of vertices of the cyclic quiver")->required()->check(CLI::Range(1, 1000));
    sub->add_flag("--json", config.json_output, "print JSON instead of a table");
    sub->add_option("--seed", config.seed, "seed for randomized searches")->capture_default_str();
    sub->add_option("--output", config.output, "also write the JSON report to this file");
  };
  auto with_k = [&](CLI::App* sub, int lowest) {
    sub->add_option("--k", config.k, "number of valleys")->check(CLI::Range(lowest, 1000))->capture_default_str();
  };
  auto with_max = [&](CLI::App* sub) {
    sub->add_option("--max-valleys", config.max_valleys, "largest valley count")
        ->check(CLI::Range(0, 1000))
        ->capture_default_str();
  };

  auto* algebra = app.add_subcommand("algebra", "the Nakayama algebra and its enveloping torus algebra");
  common(algebra);
  auto* cat = app.add_subcommand("catalog", "string and projective bimodules up to a valley bound");
  common(cat);
  with_max(cat);
  auto* tensor = app.add_subcommand("tensor", "decompose the tensor product of two bimodules");
  common(tensor);
  tensor->add_option("U", config.u, "left factor, e.g. N:1|2:k=1")->required();
  tensor->add_option("V", config.v, "right factor")->required();
  auto* multable = app.add_subcommand("multable", "all products in J_k against the multiplication table");
  common(multable);
  with_k(multable, 1);
  auto* cells = app.add_subcommand("cells", "left, right and two-sided cells with egg-boxes");
  common(cells);
  with_max(cells);
  auto* adjunction = app.add_subcommand("adjunction", "left restriction and duals of S^(k)");
  common(adjunction);
  with_k(adjunction, 0);
  auto* cellrep = app.add_subcommand("cellrep", "the cell birepresentation of J_k");
  common(cellrep);
  with_k(cellrep, 1);
  cellrep->add_option("--j", config.j, "left cell index")->check(CLI::Range(1, 1000))->capture_default_str();
  auto* localize = app.add_subcommand("localize", "contract arrows of the cell birepresentation");
  common(localize);
  with_k(localize, 1);
  localize->add_option("--j", config.j, "left cell index")->check(CLI::Range(1, 1000))->capture_default_str();
  localize->add_option("--contract", config.contract, "comma separated components, e.g. 1,3");
  auto* classify = app.add_subcommand("classify", "all localizations of the cell birepresentation");
  common(classify);
  with_k(classify, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  try {
    return run(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

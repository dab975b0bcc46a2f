// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/reports.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "nakayama/birep.hpp"
#include "nakayama/cells.hpp"
#include "nakayama/json_util.hpp"
#include "nakayama/tensor.hpp"
#include "nakayama/torus_algebra.hpp"

namespace nakayama {

namespace {

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

void require_k(int k, int lowest) {
  if (k < lowest) throw std::invalid_argument("k must be at least " + std::to_string(lowest));
}

nlohmann::json dims_json(const Bimodule& x) {
  nlohmann::json out = nlohmann::json::object();
  for (int i = 1; i <= x.n(); ++i)
    for (int j = 1; j <= x.n(); ++j)
      if (x.dim(i, j) > 0) out[std::to_string(i) + "|" + std::to_string(j)] = x.dim(i, j);
  return out;
}

nlohmann::json multiset_json(const std::map<StringLabel, int>& m) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [label, mult] : m) out[to_string(label)] = mult;
  return out;
}

nlohmann::json report_json(const VerificationReport& r) {
  return {{"checks", r.checks}, {"failures", r.failures}, {"ok", r.ok()}};
}

}  // namespace

Report algebra_report(int n) {
  require_n(n);
  const auto t = torus(n);
  return {{{"n", n}, {"base", to_json(t->base())}, {"torus", to_json(*t)}}, true};
}

Report catalog_report(int n, int max_valleys, const SearchOptions& options) {
  require_n(n);
  require_k(max_valleys, 0);
  (void)options;
  const auto cat = catalog(n, max_valleys);
  Report report;
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t a = 0; a < cat->size(); ++a) {
    const auto& label = cat->label(a);
    const auto& x = cat->bimodule(a);
    const std::size_t k = static_cast<std::size_t>(label.k);
    std::size_t expected = 0;
    switch (label.family) {
      case Family::P: expected = 4; break;
      case Family::L:
      case Family::W: expected = 2 * k + 1; break;
      case Family::S:
      case Family::N: expected = 2 * k + 2; break;
      case Family::M: expected = 2 * k + 3; break;
    }
    const bool relations = x.satisfies_relations();
    const bool valleys = label.family == Family::P || valley_count(walk(label)) == k;
    const bool ok = relations && valleys && x.total_dimension() == expected;
    report.ok = report.ok && ok;
    std::string display = to_string(label);
    if (label.family == Family::W && label.k == 0)
      display += " (L:" + std::to_string(label.i) + "|" + std::to_string(label.j) + ")";
    members.push_back({{"label", to_string(label)},
                       {"display", display},
                       {"family", std::string(1, family_char(label.family))},
                       {"i", label.i},
                       {"j", label.j},
                       {"k", label.k},
                       {"dimension", x.total_dimension()},
                       {"dims", dims_json(x)},
                       {"cell", to_string(cell_of(label))},
                       {"ok", ok}});
  }
  report.json = {{"n", n}, {"max_valleys", max_valleys}, {"members", members}, {"ok", report.ok}};
  return report;
}

Report tensor_report(int n, const std::string& u, const std::string& v, const SearchOptions& options) {
  require_n(n);
  const auto lu = canonical(parse_label(u), n), lv = canonical(parse_label(v), n);
  const auto t = tensor(construct(lu, n), construct(lv, n));
  auto r = decompose(t, std::max(lu.k, lv.k), options);
  if (r.has_residual()) {
    // Any summand of t has dimension at most dim t.
    const int bound = std::max<int>(0, (static_cast<int>(t.total_dimension()) - 2) / 2);
    r = decompose(t, bound, options);
  }
  auto j = to_json(r);
  j["n"] = n;
  j["u"] = to_string(lu);
  j["v"] = to_string(lv);
  j["dimension"] = t.total_dimension();
  j["dims"] = dims_json(t);
  j["ok"] = !r.has_residual();
  return {j, !r.has_residual()};
}

Report multable_report(int n, int k, const SearchOptions& options) {
  require_n(n);
  require_k(k, 1);
  const auto cat = catalog(n, k);
  const CellTag apex{CellTag::Kind::kValley, k};
  std::vector<StringLabel> members;
  for (auto f : {Family::W, Family::S, Family::N, Family::M})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) members.push_back({f, i, j, k});
  Report report;
  nlohmann::json mismatches = nlohmann::json::array();
  nlohmann::json residuals = nlohmann::json::array();
  std::map<StringLabel, int> ff;
  // ffij[(i, j, l)]: valley part of F_{i|j} (x) F_{j|l}.
  std::map<std::tuple<int, int, int>, std::map<StringLabel, int>> ffij;
  std::map<std::pair<char, char>, std::set<char>> observed;
  std::size_t products = 0;
  for (const auto& u : members)
    for (const auto& v : members) {
      const auto r = decompose(tensor(cat->bimodule(*cat->find(u)), cat->bimodule(*cat->find(v))), *cat, options);
      ++products;
      if (r.has_residual()) residuals.push_back({{"u", to_string(u)}, {"v", to_string(v)}});
      const auto part = r.in_cell(apex);
      std::map<StringLabel, int> expected;
      if (u.j == v.i) expected[{expected_product(u.family, v.family), u.i, v.j, k}] = 1;
      if (part != expected)
        mismatches.push_back({{"u", to_string(u)}, {"v", to_string(v)}, {"expected", multiset_json(expected)},
                              {"actual", multiset_json(part)}});
      if (u.j == v.i) {
        auto& seen = observed[{family_char(u.family), family_char(v.family)}];
        for (const auto& [z, m] : part) seen.insert(family_char(z.family));
      }
      for (const auto& [z, m] : part) {
        ff[z] += m;
        if (u.j == v.i) ffij[{u.i, u.j, v.j}][z] += m;
      }
    }
  bool ff_ok = true;
  for (const auto& z : members) ff_ok = ff_ok && ff[z] == 4 * n;
  ff_ok = ff_ok && ff.size() == members.size();
  bool ffij_ok = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) {
        std::map<StringLabel, int> expected;
        for (auto f : {Family::W, Family::S, Family::N, Family::M}) expected[{f, i, l, k}] = 4;
        ffij_ok = ffij_ok && ffij[{i, j, l}] == expected;
      }
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [pair, result] : observed) {
    std::string s;
    for (char c : result) s += c;
    table[std::string(1, pair.first) + std::string(1, pair.second)] = s;
  }
  report.ok = mismatches.empty() && residuals.empty() && ff_ok && ffij_ok;
  report.json = {{"n", n},
                 {"k", k},
                 {"products", products},
                 {"table", table},
                 {"mismatches", mismatches},
                 {"residual_products", residuals},
                 {"f_tensor_f", ff_ok},
                 {"f_ij_tensor_f_jl", ffij_ok},
                 {"ok", report.ok}};
  return report;
}

Report cells_report(int n, int max_valleys, const SearchOptions& options) {
  require_n(n);
  require_k(max_valleys, 0);
  const auto s = compute_cells(n, max_valleys, options);
  const auto check = verify_cells(s);
  auto j = to_json(s);
  j["checks"] = {{"egg_boxes", check.egg_boxes},
                 {"chain", check.chain},
                 {"idempotency", check.idempotency},
                 {"tags", check.tags},
                 {"failures", check.failures}};
  const bool ok = check.ok() && s.residual_free;
  j["ok"] = ok;
  return {j, ok};
}

Report adjunction_report(int n, int k, const SearchOptions& options) {
  require_n(n);
  require_k(k, 0);
  Report report;
  nlohmann::json pairs = nlohmann::json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto s = construct({Family::S, i, j, k}, n);
      const auto left = restrict_left(s, options);
      std::vector<LeftSummand> expected;
      for (int m = 0; m <= k; ++m) expected.push_back({true, residue(i + m, n)});
      std::sort(expected.begin(), expected.end());
      const bool left_ok = left == expected;
      const bool hom_ok = is_isomorphic(hom_to_algebra(s), construct({Family::N, j, i, k}, n), options);
      nlohmann::json names = nlohmann::json::array();
      for (const auto& l : left) names.push_back(to_string(l));
      pairs.push_back({{"i", i},
                       {"j", j},
                       {"restrict_left", names},
                       {"restrict_left_ok", left_ok},
                       {"hom_to_algebra", to_string(StringLabel{Family::N, j, i, k})},
                       {"hom_to_algebra_ok", hom_ok}});
      report.ok = report.ok && left_ok && hom_ok;
    }
  report.json = {{"n", n}, {"k", k}, {"pairs", pairs}, {"ok", report.ok}};
  return report;
}

namespace {

Report birep_summary(const FinitaryBirep& b, const CartanData* cartan) {
  const auto a = verify_action_identities(b), s = verify_block_structure(b), c = verify_adjunction_consequences(b);
  const bool simple = is_simple_transitive(b);
  auto j = to_json(b);
  if (cartan) {
    nlohmann::json amb = cartan->ambient, quo = cartan->quotient;
    j["cartan_ambient"] = amb;
    j["cartan_quotient"] = quo;
  }
  j["simple_transitive"] = simple;
  j["fingerprint"] = fingerprint(b);
  j["verifications"] = {{"action_identities", report_json(a)},
                        {"block_structure", report_json(s)},
                        {"adjunction_consequences", report_json(c)}};
  const bool ok = a.ok() && s.ok() && c.ok() && simple;
  j["ok"] = ok;
  return {j, ok};
}

}  // namespace

Report cellrep_report(int n, int k, int j, const SearchOptions& options) {
  CartanData cartan;
  const auto b = cell_birep(n, k, j, options, &cartan);
  return birep_summary(b, &cartan);
}

Report localize_report(int n, int k, int j, const std::vector<int>& contract, const SearchOptions& options) {
  const auto b = localize(cell_birep(n, k, j, options), contract);
  auto r = birep_summary(b, nullptr);
  const bool rank_ok = b.rank() == static_cast<std::size_t>(2 * n) - b.contracted.size();
  r.json["rank_expected"] = 2 * n - static_cast<int>(b.contracted.size());
  r.ok = r.ok && rank_ok;
  r.json["ok"] = r.ok;
  return r;
}

Report classify_report(int n, int k, const SearchOptions& options) {
  const auto c = classify(n, k, options);
  return {to_json(c), c.matches_expected()};
}

}  // namespace nakayama

// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nakayama/birep.hpp"
#include "nakayama/cells.hpp"
#include "nakayama/tensor.hpp"
#include "nakayama/torus_algebra.hpp"

using namespace nakayama;

namespace {

constexpr Family kFamilies[] = {Family::W, Family::S, Family::N, Family::M};

// Rows U, columns V, in the order W, S, N, M.
constexpr Family kTable[4][4] = {{Family::W, Family::W, Family::N, Family::N},
                                 {Family::S, Family::S, Family::M, Family::M},
                                 {Family::W, Family::W, Family::N, Family::N},
                                 {Family::S, Family::S, Family::M, Family::M}};

int family_index(Family f) {
  for (int a = 0; a < 4; ++a)
    if (kFamilies[a] == f) return a;
  return -1;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<StringLabel> apex_members(int n, int k) {
  std::vector<StringLabel> out;
  for (auto f : kFamilies)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.push_back({f, i, j, k});
  return out;
}

using ValleyPart = std::map<StringLabel, int>;

// Valley parts of all products in J_k, shared by criteria 1 and 2.
std::map<std::pair<int, int>, std::map<std::pair<StringLabel, StringLabel>, ValleyPart>> g_products;
std::map<std::pair<int, int>, std::size_t> g_residuals;

void compute_products(int n, int k) {
  const auto cat = catalog(n, k);
  auto& table = g_products[{n, k}];
  for (const auto& u : apex_members(n, k))
    for (const auto& v : apex_members(n, k)) {
      const auto r = decompose(tensor(construct(u, n), construct(v, n)), *cat);
      if (r.has_residual()) ++g_residuals[{n, k}];
      table[{u, v}] = r.in_cell({CellTag::Kind::kValley, k});
    }
}

Outcome criterion1() {
  Outcome o;
  std::size_t products = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      compute_products(n, k);
      if (g_residuals[{n, k}] > 0) o.fail("unrecognised summands for n=" + std::to_string(n));
      for (const auto& [uv, part] : g_products[{n, k}]) {
        ++products;
        const auto& [u, v] = uv;
        ValleyPart expected;
        if (u.j == v.i) expected[{kTable[family_index(u.family)][family_index(v.family)], u.i, v.j, k}] = 1;
        if (part != expected) o.fail(to_string(u) + " (x) " + to_string(v));
      }
    }
  if (o.pass) o.detail = std::to_string(products) + " products, n in {1,2,3}, k in {1,2}";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      const auto& table = g_products[{n, k}];
      ValleyPart whole;
      std::map<std::tuple<int, int, int>, ValleyPart> blocks;
      for (const auto& [uv, part] : table)
        for (const auto& [z, m] : part) {
          whole[z] += m;
          if (uv.first.j == uv.second.i) blocks[{uv.first.i, uv.first.j, uv.second.j}][z] += m;
        }
      ValleyPart expected_whole;
      for (const auto& z : apex_members(n, k)) expected_whole[z] = 4 * n;
      if (whole != expected_whole) o.fail("F (x) F for n=" + std::to_string(n) + ", k=" + std::to_string(k));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int l = 1; l <= n; ++l) {
            ValleyPart expected;
            for (auto f : kFamilies) expected[{f, i, l, k}] = 4;
            if (blocks[{i, j, l}] != expected) o.fail("F_{i|j} (x) F_{j|l} for n=" + std::to_string(n));
          }
    }
  if (o.pass) o.detail = "F(x)F = F^(4n) and F_{i|j}(x)F_{j|l} = F_{i|l}^4 modulo greater cells";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 2; ++k)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const auto s = construct({Family::S, i, j, k}, n);
          std::vector<LeftSummand> expected;
          for (int m = 0; m <= k; ++m) expected.push_back({true, residue(i + m, n)});
          std::sort(expected.begin(), expected.end());
          if (restrict_left(s) != expected) o.fail("left restriction of " + to_string(StringLabel{Family::S, i, j, k}));
          if (!is_isomorphic(hom_to_algebra(s), construct({Family::N, j, i, k}, n)))
            o.fail("dual of " + to_string(StringLabel{Family::S, i, j, k}));
          ++checked;
        }
  if (o.pass) o.detail = std::to_string(checked) + " bimodules S^(k)_{i|j}, n <= 3, k <= 2";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const auto s = compute_cells(n, 2);
    const std::string at = " (n=" + std::to_string(n) + ")";
    if (!s.residual_free) o.fail("unrecognised summands" + at);
    const CellTag split{CellTag::Kind::kSplit, 0}, m0{CellTag::Kind::kM0, 0}, j1{CellTag::Kind::kValley, 1},
        j2{CellTag::Kind::kValley, 2};
    std::vector<std::size_t> chain;
    for (const auto& tag : {split, m0, j1, j2}) {
      auto c = s.cell_with_tag(tag);
      if (!c) {
        o.fail("missing cell " + to_string(tag) + at);
        return o;
      }
      chain.push_back(*c);
    }
    if (std::set<std::size_t>(chain.begin(), chain.end()).size() != 4) o.fail("cells coincide" + at);
    for (std::size_t a = 0; a < chain.size(); ++a)
      for (std::size_t b = 0; b < chain.size(); ++b)
        if (s.geq[chain[a]][chain[b]] != (a <= b)) o.fail("two-sided order" + at);
    std::size_t non_idempotent = 0;
    for (std::size_t c = 0; c < s.two_sided_cells.size(); ++c)
      if (!s.idempotent[c]) {
        ++non_idempotent;
        if (c != chain[1]) o.fail("non-idempotent cell other than J_M0" + at);
      }
    if (non_idempotent != 1) o.fail("J_M0 is not the unique non-idempotent cell" + at);
    for (int k = 1; k <= 2; ++k) {
      // Left cells: columns {W,S}_{.|j}, {N,M}_{.|j}; right cells: rows {W,N}_{i|.}, {S,M}_{i|.}.
      std::set<std::set<StringLabel>> columns, rows, left, right;
      for (int fixed = 1; fixed <= n; ++fixed)
        for (int half = 0; half < 2; ++half) {
          std::set<StringLabel> col, row;
          for (int free = 1; free <= n; ++free) {
            for (auto f : half == 0 ? std::vector{Family::W, Family::S} : std::vector{Family::N, Family::M})
              col.insert({f, free, fixed, k});
            for (auto f : half == 0 ? std::vector{Family::W, Family::N} : std::vector{Family::S, Family::M})
              row.insert({f, fixed, free, k});
          }
          columns.insert(col);
          rows.insert(row);
        }
      const CellTag tag{CellTag::Kind::kValley, k};
      auto collect = [&](const std::vector<std::vector<std::size_t>>& parts, std::set<std::set<StringLabel>>& out) {
        for (const auto& p : parts) {
          std::set<StringLabel> members;
          for (auto e : p)
            if (cell_of(s.elements[e]) == tag) members.insert(s.elements[e]);
          if (!members.empty()) out.insert(members);
        }
      };
      collect(s.left_cells, left);
      collect(s.right_cells, right);
      if (left != columns) o.fail("left cells of J_" + std::to_string(k) + at);
      if (right != rows) o.fail("right cells of J_" + std::to_string(k) + at);
      for (const auto& l : left)
        for (const auto& r : right) {
          std::size_t meet = 0;
          for (const auto& x : l) meet += r.count(x);
          if (meet != 1) o.fail("egg-box of J_" + std::to_string(k) + at);
        }
    }
  }
  if (o.pass) o.detail = "2n x 2n egg-boxes, J_split > J_M0 > J_1 > J_2, J_M0 unique non-idempotent, n = 1..3";
  return o;
}

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> component_objects(const FinitaryBirep& b, int i) {
  std::vector<std::size_t> out;
  for (auto kind : {BirepObject::Kind::kN, BirepObject::Kind::kMerged, BirepObject::Kind::kM})
    for (std::size_t x = 0; x < b.rank(); ++x)
      if (b.objects[x].component == i && b.objects[x].kind == kind) out.push_back(x);
  return out;
}

Outcome criterion5() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto cell = cell_birep(n, 1, 1);
    for (const auto& contract : subsets(n)) {
      const auto b = localize(cell, contract);
      ++count;
      const std::string at = " (n=" + std::to_string(n) + ", |I|=" + std::to_string(contract.size()) + ")";
      Matrix f(b.rank(), b.rank());
      for (const auto& a : b.action) f = f + a;
      if (!(f * f == Scalar(4 * n) * f)) o.fail("[F]^2 != 4n[F]" + at);
      Scalar trace = 0;
      for (std::size_t x = 0; x < b.rank(); ++x) trace += f(x, x);
      if (trace != 4 * n) o.fail("trace" + at);
      for (const auto& e : f.data())
        if (sgn(e) <= 0) o.fail("nonpositive entry" + at);
      auto contracted = [&](int i) { return std::count(contract.begin(), contract.end(), i) > 0; };
      for (std::size_t g = 0; g < b.generators.size(); ++g) {
        const auto& u = b.generators[g];
        const auto rows = component_objects(b, u.i), cols = component_objects(b, u.j);
        Matrix block(rows.size(), cols.size());
        Scalar outside = 0;
        for (std::size_t r = 0; r < b.rank(); ++r)
          for (std::size_t c = 0; c < b.rank(); ++c) {
            auto ri = std::find(rows.begin(), rows.end(), r), ci = std::find(cols.begin(), cols.end(), c);
            if (ri != rows.end() && ci != cols.end()) block(ri - rows.begin(), ci - cols.begin()) = b.action[g](r, c);
            else outside += b.action[g](r, c);
          }
        if (outside != 0) o.fail("entries outside the block of " + to_string(u) + at);
        const bool top = u.family == Family::W || u.family == Family::N;
        const bool ci = contracted(u.i), cj = contracted(u.j);
        Matrix expected;
        if (ci && cj) expected = Matrix{{1}};
        else if (ci) expected = Matrix{{1, 1}};
        else if (cj) expected = top ? Matrix{{1}, {0}} : Matrix{{0}, {1}};
        else expected = top ? Matrix{{1, 1}, {0, 0}} : Matrix{{0, 0}, {1, 1}};
        if (!(block == expected)) o.fail("block of " + to_string(u) + at);
      }
      for (int i = 1; i <= n; ++i) {
        const auto objs = component_objects(b, i);
        Matrix a(objs.size(), objs.size());
        for (std::size_t r = 0; r < objs.size(); ++r)
          for (std::size_t c = 0; c < objs.size(); ++c) a(r, c) = f(objs[r], objs[c]);
        if (!(a * a == Scalar(4) * a)) o.fail("A_{i|i}^2 != 4 A_{i|i}" + at);
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " localized cell birepresentations, n <= 3, k = 1";
  return o;
}

std::size_t binomial(int n, int m) {
  std::size_t r = 1;
  for (int t = 1; t <= m; ++t) r = r * static_cast<std::size_t>(n - m + t) / static_cast<std::size_t>(t);
  return r;
}

Outcome criterion6() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const auto report = classify(n, 1);
    const std::string at = " (n=" + std::to_string(n) + ")";
    if (report.entries.size() != (std::size_t{1} << n)) o.fail("entry count" + at);
    std::set<std::vector<int>> prints;
    std::map<std::size_t, std::size_t> counts;
    for (const auto& e : report.entries) {
      if (!e.simple_transitive) o.fail("not simple transitive" + at);
      if (e.rank < static_cast<std::size_t>(n) || e.rank > static_cast<std::size_t>(2 * n)) o.fail("rank bound" + at);
      prints.insert(e.fingerprint);
      ++counts[e.rank];
    }
    if (prints.size() != report.entries.size()) o.fail("fingerprints coincide" + at);
    for (int m = 0; m <= n; ++m)
      if (counts[static_cast<std::size_t>(n + m)] != binomial(n, m)) o.fail("count of rank n+j" + at);
  }
  if (o.pass) o.detail = "2^n simple transitive, counts C(n,j), distinct fingerprints, n = 1..3";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      const auto b = cell_birep(n, k, 1);
      const auto same = localize(b, {});
      if (same.rank() != b.rank() || !(same.action == b.action) || same.arrows.size() != b.arrows.size())
        o.fail("I = {} changes the birepresentation");
      for (const auto& contract : subsets(n)) {
        const auto l = localize(b, contract);
        if (l.rank() != static_cast<std::size_t>(2 * n) - contract.size()) o.fail("rank != 2n - |I|");
        if (l.arrows.size() != static_cast<std::size_t>(n) - contract.size()) o.fail("arrow count");
      }
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 1);
      if (localize(b, all).rank() != static_cast<std::size_t>(n)) o.fail("I = {1..n} does not give rank n");
    }
  if (o.pass) o.detail = "rank 2n - |I| for all subsets, n <= 3, k <= 2";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const int n = 2, k = 1;
  const auto cell = cell_birep(n, k, 1);
  const auto cat = catalog(n, k);
  const auto members = apex_members(n, k);
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  std::uniform_int_distribution<unsigned> mask(0, (1u << n) - 1);
  std::map<unsigned, FinitaryBirep> localized;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& u = members[pick(rng)];
    const auto& v = members[pick(rng)];
    const unsigned m = mask(rng);
    if (!localized.count(m)) {
      std::vector<int> contract;
      for (int i = 1; i <= n; ++i)
        if (m & (1u << (i - 1))) contract.push_back(i);
      localized.emplace(m, localize(cell, contract));
    }
    const auto& b = localized.at(m);
    const auto r = decompose(tensor(construct(u, n), construct(v, n)), *cat);
    Matrix sum(b.rank(), b.rank());
    for (const auto& [z, mult] : r.in_cell({CellTag::Kind::kValley, k}))
      sum = sum + Scalar(mult) * action_matrix(b, z);
    if (!(action_matrix(b, u) * action_matrix(b, v) == sum)) o.fail(to_string(u) + " (x) " + to_string(v));
  }
  if (o.pass) o.detail = "200 seeded triples (U, V, I), n = 2, J_1";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"multiplication table of J_k", criterion1},
      {"F (x) F modulo greater cells", criterion2},
      {"adjunction data", criterion3},
      {"egg-box and cell chain", criterion4},
      {"action-matrix identities and blocks", criterion5},
      {"classification counts", criterion6},
      {"localization ranks", criterion7},
      {"matrix and module agreement", criterion8},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << (c + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[c].first << " - "
         << o.detail << " [" << seconds << "s]";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

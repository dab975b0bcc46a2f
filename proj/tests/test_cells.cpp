// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "doctest.h"
#include "nakayama/cells.hpp"

using namespace nakayama;

namespace {

using LabelSet = std::set<StringLabel>;

std::set<LabelSet> as_sets(const CellStructure& s, const std::vector<std::vector<std::size_t>>& parts,
                           const CellTag& tag) {
  std::set<LabelSet> out;
  for (const auto& part : parts) {
    LabelSet members;
    for (auto e : part)
      if (cell_of(s.elements[e]) == tag) members.insert(s.elements[e]);
    if (!members.empty()) out.insert(members);
  }
  return out;
}

// Columns {W, S}_{.|j}, {N, M}_{.|j} and rows {W, N}_{i|.}, {S, M}_{i|.}.
std::set<LabelSet> expected_lines(int n, int k, bool columns) {
  std::set<LabelSet> out;
  const std::pair<Family, Family> pairs[] = {
      columns ? std::pair{Family::W, Family::S} : std::pair{Family::W, Family::N},
      columns ? std::pair{Family::N, Family::M} : std::pair{Family::S, Family::M}};
  for (int fixed = 1; fixed <= n; ++fixed)
    for (auto [f, g] : pairs) {
      LabelSet line;
      for (int free = 1; free <= n; ++free)
        for (auto fam : {f, g}) {
          const int i = columns ? free : fixed, j = columns ? fixed : free;
          line.insert({fam, i, j, k});
        }
      out.insert(line);
    }
  return out;
}

}  // namespace

TEST_CASE("expected products") {
  CHECK(expected_product(Family::W, Family::W) == Family::W);
  CHECK(expected_product(Family::N, Family::S) == Family::W);
  CHECK(expected_product(Family::N, Family::M) == Family::N);
  CHECK(expected_product(Family::S, Family::W) == Family::S);
  CHECK(expected_product(Family::M, Family::N) == Family::M);
}

TEST_CASE("cells for n = 2, one valley") {
  const auto s = compute_cells(2, 1);
  CHECK(s.residual_free);
  CHECK(s.catalog_relative);
  const auto j1 = s.cell_with_tag({CellTag::Kind::kValley, 1});
  const auto split = s.cell_with_tag({CellTag::Kind::kSplit, 0});
  const auto m0 = s.cell_with_tag({CellTag::Kind::kM0, 0});
  REQUIRE(j1);
  REQUIRE(split);
  REQUIRE(m0);
  CHECK(*j1 != *split);
  CHECK(*j1 != *m0);
  CHECK(*split != *m0);
  CHECK(s.geq[*split][*m0]);
  CHECK(s.geq[*m0][*j1]);
  CHECK_FALSE(s.geq[*j1][*m0]);
  CHECK_FALSE(s.geq[*m0][*split]);
  CHECK(is_idempotent_cell(*j1, s));
  CHECK(is_idempotent_cell(*split, s));
  CHECK_FALSE(is_idempotent_cell(*m0, s));

  const CellTag tag{CellTag::Kind::kValley, 1};
  const auto left = as_sets(s, s.left_cells, tag), right = as_sets(s, s.right_cells, tag);
  CHECK(left.size() == 4);
  CHECK(right.size() == 4);
  for (const auto& c : left) CHECK(c.size() == 4);
  CHECK(left == expected_lines(2, 1, true));
  CHECK(right == expected_lines(2, 1, false));

  const auto box = egg_box(s, *j1);
  CHECK(box.rows.size() == 4);
  CHECK(box.columns.size() == 4);
  for (const auto& row : box.grid)
    for (const auto& entry : row) CHECK(entry.size() == 1);
}

TEST_CASE("property: cell partitions are consistent") {
  for (int n = 1; n <= 3; ++n) {
    const auto s = compute_cells(n, n == 1 ? 2 : 1);
    CHECK(verify_cells(s).ok());
    std::vector<std::size_t> two_sided(s.elements.size());
    for (std::size_t c = 0; c < s.two_sided_cells.size(); ++c)
      for (auto e : s.two_sided_cells[c]) two_sided[e] = c;
    // Left and right cells refine two-sided cells; every element lies in one cell.
    for (const auto* parts : {&s.left_cells, &s.right_cells}) {
      std::size_t total = 0;
      for (const auto& part : *parts) {
        total += part.size();
        for (auto e : part) CHECK(two_sided[e] == two_sided[part.front()]);
      }
      CHECK(total == s.elements.size());
    }
    // The two-sided order is a total preorder on the computed cells.
    for (std::size_t a = 0; a < s.geq.size(); ++a) {
      CHECK(s.geq[a][a]);
      for (std::size_t b = 0; b < s.geq.size(); ++b) {
        CHECK((s.geq[a][b] || s.geq[b][a]));
        if (a != b) CHECK_FALSE((s.geq[a][b] && s.geq[b][a]));
        for (std::size_t c = 0; c < s.geq.size(); ++c)
          if (s.geq[a][b] && s.geq[b][c]) CHECK(s.geq[a][c]);
      }
    }
  }
}

TEST_CASE("cells JSON mentions the band cell") {
  const auto j = to_json(compute_cells(1, 1));
  CHECK(j.at("catalog_relative") == true);
  CHECK(j.dump().find("J_band") != std::string::npos);
}

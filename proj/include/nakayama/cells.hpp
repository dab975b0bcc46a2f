// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_CELLS_HPP
#define NAKAYAMA_CELLS_HPP

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "nakayama/decompose.hpp"

namespace nakayama {

/// Family of the valley-cell summand of U (x) V when the inner indices agree.
Family expected_product(Family u, Family v);

/// Decompositions of every product of two catalog members.
struct ProductTable {
  CatalogPtr catalog;
  /// entries[a][b]: multiplicities (by catalog index) of the summands of a (x) b.
  std::vector<std::vector<std::map<std::size_t, int>>> entries;
  /// Products whose decomposition left a residual, as (a, b).
  std::vector<std::pair<std::size_t, std::size_t>> residual_pairs;
  std::size_t products_computed = 0;
};

/// Uses the automorphism shifting both indices by one: only products whose
/// left factor starts at row 1 are decomposed.
ProductTable product_table(int n, int max_valleys, const SearchOptions& options = {});

struct CellStructure {
  int n = 1;
  int max_valleys = 0;
  std::vector<StringLabel> elements;
  std::vector<std::vector<std::size_t>> left_cells;
  std::vector<std::vector<std::size_t>> right_cells;
  std::vector<std::vector<std::size_t>> two_sided_cells;
  /// Cell tag of each two-sided cell, when all members share one.
  std::vector<std::optional<CellTag>> two_sided_tags;
  /// geq[a][b]: two-sided cell a is J-greater or equal to cell b.
  std::vector<std::vector<bool>> geq;
  std::vector<bool> idempotent;
  /// The preorders quantify over catalog members only.
  bool catalog_relative = true;
  bool residual_free = true;
  std::size_t products_computed = 0;

  std::optional<std::size_t> cell_with_tag(const CellTag& tag) const;
};

CellStructure compute_cells(int n, int max_valleys, const SearchOptions& options = {});
CellStructure compute_cells(const ProductTable& table);

bool is_idempotent_cell(std::size_t cell, const CellStructure& structure);

/// Egg-box of a valley cell: rows are right cells, columns are left cells.
/// grid[r][c] lists the members in both.
struct EggBox {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> columns;
  std::vector<std::vector<std::vector<std::size_t>>> grid;
};

EggBox egg_box(const CellStructure& structure, std::size_t cell);

/// Left cells {W,S} and {N,M} per column, right cells {W,N} and {S,M} per
/// row, one member per box, and the chain split > M0 > J_1 > ... with only
/// J_M0 non-idempotent.
struct CellCheck {
  bool egg_boxes = true;
  bool chain = true;
  bool idempotency = true;
  bool tags = true;
  std::vector<std::string> failures;
  bool ok() const { return egg_boxes && chain && idempotency && tags; }
};

CellCheck verify_cells(const CellStructure& structure);

nlohmann::json to_json(const CellStructure& structure);

}  // namespace nakayama

#endif  // NAKAYAMA_CELLS_HPP

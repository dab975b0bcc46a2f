// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/cells.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nakayama/tensor.hpp"

namespace nakayama {

Family expected_product(Family u, Family v) {
  const bool top = u == Family::W || u == Family::N;
  const bool first = v == Family::W || v == Family::S;
  if (top) return first ? Family::W : Family::N;
  return first ? Family::S : Family::M;
}

namespace {

StringLabel shifted(const StringLabel& l, int s, int n) {
  return canonical(StringLabel{l.family, l.i + s, l.j + s, l.k}, n);
}

using Preorder = std::vector<std::vector<bool>>;

void close_transitively(Preorder& r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
}

std::vector<std::vector<std::size_t>> classes(const Preorder& r) {
  const std::size_t n = r.size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(out.size());
    out.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j)
      if (cls[j] < 0 && r[i][j] && r[j][i]) {
        cls[j] = cls[i];
        out.back().push_back(j);
      }
  }
  return out;
}

}  // namespace

ProductTable product_table(int n, int max_valleys, const SearchOptions& options) {
  ProductTable table;
  table.catalog = catalog(n, max_valleys);
  const auto& cat = *table.catalog;
  const std::size_t size = cat.size();
  table.entries.assign(size, std::vector<std::map<std::size_t, int>>(size));
  std::vector<std::vector<bool>> done(size, std::vector<bool>(size, false));

  for (std::size_t a = 0; a < size; ++a) {
    if (cat.label(a).i != 1) continue;
    for (std::size_t b = 0; b < size; ++b) {
      const auto report = decompose(tensor(cat.bimodule(a), cat.bimodule(b)), cat, options);
      ++table.products_computed;
      std::map<std::size_t, int> entry;
      for (const auto& [label, mult] : report.multiplicities()) entry[*cat.find(label)] = mult;
      // Transport to every shift of the pair.
      for (int s = 0; s < n; ++s) {
        const auto sa = *cat.find(shifted(cat.label(a), s, n));
        const auto sb = *cat.find(shifted(cat.label(b), s, n));
        if (done[sa][sb]) continue;
        done[sa][sb] = true;
        auto& target = table.entries[sa][sb];
        for (const auto& [idx, mult] : entry) target[*cat.find(shifted(cat.label(idx), s, n))] = mult;
        if (report.has_residual()) table.residual_pairs.push_back({sa, sb});
      }
    }
  }
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (!done[a][b]) throw std::logic_error("product_table: shift orbit missed a pair");
  std::sort(table.residual_pairs.begin(), table.residual_pairs.end());
  return table;
}

std::optional<std::size_t> CellStructure::cell_with_tag(const CellTag& tag) const {
  for (std::size_t c = 0; c < two_sided_tags.size(); ++c)
    if (two_sided_tags[c] && *two_sided_tags[c] == tag) return c;
  return std::nullopt;
}

CellStructure compute_cells(int n, int max_valleys, const SearchOptions& options) {
  return compute_cells(product_table(n, max_valleys, options));
}

CellStructure compute_cells(const ProductTable& table) {
  const auto& cat = *table.catalog;
  const std::size_t size = cat.size();
  CellStructure out;
  out.n = cat.n();
  out.max_valleys = cat.max_valleys();
  out.elements = cat.labels();
  out.residual_free = table.residual_pairs.empty();
  out.products_computed = table.products_computed;

  // below_l[f][g]: f <=_L g, that is g is a summand of h (x) f or g = f.
  Preorder below_l(size, std::vector<bool>(size, false)), below_r = below_l;
  for (std::size_t f = 0; f < size; ++f) below_l[f][f] = below_r[f][f] = true;
  for (std::size_t h = 0; h < size; ++h)
    for (std::size_t f = 0; f < size; ++f) {
      for (const auto& [g, mult] : table.entries[h][f]) below_l[f][g] = true;
      for (const auto& [g, mult] : table.entries[f][h]) below_r[f][g] = true;
    }
  Preorder below_j(size, std::vector<bool>(size, false));
  for (std::size_t f = 0; f < size; ++f)
    for (std::size_t g = 0; g < size; ++g) below_j[f][g] = below_l[f][g] || below_r[f][g];
  close_transitively(below_l);
  close_transitively(below_r);
  close_transitively(below_j);
  out.left_cells = classes(below_l);
  out.right_cells = classes(below_r);
  out.two_sided_cells = classes(below_j);

  const std::size_t cells = out.two_sided_cells.size();
  out.geq.assign(cells, std::vector<bool>(cells, false));
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = 0; b < cells; ++b)
      out.geq[a][b] = below_j[out.two_sided_cells[b].front()][out.two_sided_cells[a].front()];
  for (const auto& members : out.two_sided_cells) {
    std::optional<CellTag> tag = cell_of(out.elements[members.front()]);
    for (auto m : members)
      if (!(cell_of(out.elements[m]) == *tag)) tag.reset();
    out.two_sided_tags.push_back(tag);
  }
  for (const auto& members : out.two_sided_cells) {
    const std::set<std::size_t> in(members.begin(), members.end());
    bool idem = false;
    for (auto g : members)
      for (auto h : members)
        for (const auto& [f, mult] : table.entries[g][h])
          if (in.count(f)) idem = true;
    out.idempotent.push_back(idem);
  }
  return out;
}

bool is_idempotent_cell(std::size_t cell, const CellStructure& structure) { return structure.idempotent.at(cell); }

EggBox egg_box(const CellStructure& s, std::size_t cell) {
  const std::set<std::size_t> in(s.two_sided_cells.at(cell).begin(), s.two_sided_cells.at(cell).end());
  EggBox box;
  auto inside = [&](const std::vector<std::size_t>& members) {
    return std::all_of(members.begin(), members.end(), [&](std::size_t m) { return in.count(m) > 0; });
  };
  for (const auto& c : s.left_cells)
    if (inside(c)) box.columns.push_back(c);
  for (const auto& r : s.right_cells)
    if (inside(r)) box.rows.push_back(r);
  box.grid.assign(box.rows.size(), std::vector<std::vector<std::size_t>>(box.columns.size()));
  for (std::size_t r = 0; r < box.rows.size(); ++r)
    for (std::size_t c = 0; c < box.columns.size(); ++c)
      for (auto m : box.rows[r])
        if (std::find(box.columns[c].begin(), box.columns[c].end(), m) != box.columns[c].end())
          box.grid[r][c].push_back(m);
  return box;
}

namespace {

std::set<StringLabel> as_labels(const CellStructure& s, const std::vector<std::size_t>& members) {
  std::set<StringLabel> out;
  for (auto m : members) out.insert(s.elements[m]);
  return out;
}

std::set<std::set<StringLabel>> expected_sets(int n, int k, bool columns) {
  std::set<std::set<StringLabel>> out;
  const std::pair<Family, Family> pairs[2] = {
      columns ? std::pair{Family::W, Family::S} : std::pair{Family::W, Family::N},
      columns ? std::pair{Family::N, Family::M} : std::pair{Family::S, Family::M}};
  for (int fixed = 1; fixed <= n; ++fixed)
    for (const auto& [f1, f2] : pairs) {
      std::set<StringLabel> set;
      for (int free = 1; free <= n; ++free) {
        const int i = columns ? free : fixed, j = columns ? fixed : free;
        set.insert({f1, i, j, k});
        set.insert({f2, i, j, k});
      }
      out.insert(set);
    }
  return out;
}

}  // namespace

CellCheck verify_cells(const CellStructure& s) {
  CellCheck check;
  std::vector<CellTag> chain{{CellTag::Kind::kSplit, 0}, {CellTag::Kind::kM0, 0}};
  for (int k = 1; k <= s.max_valleys; ++k) chain.push_back({CellTag::Kind::kValley, k});

  std::vector<std::size_t> chain_cells;
  for (const auto& tag : chain) {
    auto c = s.cell_with_tag(tag);
    if (!c) {
      check.tags = false;
      check.failures.push_back("no two-sided cell equals " + to_string(tag));
      continue;
    }
    chain_cells.push_back(*c);
  }
  if (s.two_sided_cells.size() != chain.size()) {
    check.tags = false;
    check.failures.push_back("expected " + std::to_string(chain.size()) + " two-sided cells, found " +
                             std::to_string(s.two_sided_cells.size()));
  }
  if (!check.tags) {
    check.chain = check.egg_boxes = check.idempotency = false;
    return check;
  }

  for (std::size_t a = 0; a < chain_cells.size(); ++a)
    for (std::size_t b = a + 1; b < chain_cells.size(); ++b)
      if (!s.geq[chain_cells[a]][chain_cells[b]] || s.geq[chain_cells[b]][chain_cells[a]]) {
        check.chain = false;
        check.failures.push_back(to_string(chain[a]) + " is not strictly above " + to_string(chain[b]));
      }

  for (std::size_t a = 0; a < chain_cells.size(); ++a) {
    const bool expected = chain[a].kind != CellTag::Kind::kM0;
    if (s.idempotent[chain_cells[a]] != expected) {
      check.idempotency = false;
      check.failures.push_back(to_string(chain[a]) + (expected ? " is not idempotent" : " is idempotent"));
    }
  }

  for (int k = 1; k <= s.max_valleys; ++k) {
    const auto cell = *s.cell_with_tag({CellTag::Kind::kValley, k});
    const auto box = egg_box(s, cell);
    std::set<std::set<StringLabel>> cols, rows;
    for (const auto& c : box.columns) cols.insert(as_labels(s, c));
    for (const auto& r : box.rows) rows.insert(as_labels(s, r));
    bool ok = cols == expected_sets(s.n, k, true) && rows == expected_sets(s.n, k, false) &&
              box.columns.size() == static_cast<std::size_t>(2 * s.n) &&
              box.rows.size() == static_cast<std::size_t>(2 * s.n);
    for (const auto& row : box.grid)
      for (const auto& entry : row) ok = ok && entry.size() == 1;
    if (!ok) {
      check.egg_boxes = false;
      check.failures.push_back("egg-box of J_" + std::to_string(k) + " has the wrong shape");
    }
  }
  return check;
}

nlohmann::json to_json(const CellStructure& s) {
  auto names = [&](const std::vector<std::size_t>& members) {
    nlohmann::json out = nlohmann::json::array();
    for (auto m : members) out.push_back(to_string(s.elements[m]));
    return out;
  };
  auto partition = [&](const std::vector<std::vector<std::size_t>>& parts) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : parts) out.push_back(names(p));
    return out;
  };
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t c = 0; c < s.two_sided_cells.size(); ++c) {
    nlohmann::json above = nlohmann::json::array();
    for (std::size_t d = 0; d < s.two_sided_cells.size(); ++d)
      if (d != c && s.geq[d][c]) above.push_back(d);
    cells.push_back({{"id", c},
                     {"tag", s.two_sided_tags[c] ? to_string(*s.two_sided_tags[c]) : "mixed"},
                     {"members", names(s.two_sided_cells[c])},
                     {"idempotent", static_cast<bool>(s.idempotent[c])},
                     {"strictly_above", above}});
  }
  nlohmann::json boxes = nlohmann::json::array();
  for (int k = 1; k <= s.max_valleys; ++k) {
    auto c = s.cell_with_tag({CellTag::Kind::kValley, k});
    if (!c) continue;
    auto box = egg_box(s, *c);
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& row : box.grid) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& entry : row) r.push_back(names(entry));
      grid.push_back(r);
    }
    boxes.push_back({{"cell", "J_" + std::to_string(k)}, {"grid", grid}});
  }
  nlohmann::json chain = nlohmann::json::array();
  chain.push_back("J_split");
  chain.push_back("J_M0");
  for (int k = 1; k <= s.max_valleys; ++k) chain.push_back("J_" + std::to_string(k));
  chain.push_back("J_band (not computed, below all)");
  return {{"n", s.n},
          {"max_valleys", s.max_valleys},
          {"catalog_relative", s.catalog_relative},
          {"residual_free", s.residual_free},
          {"products_computed", s.products_computed},
          {"left_cells", partition(s.left_cells)},
          {"right_cells", partition(s.right_cells)},
          {"two_sided_cells", cells},
          {"egg_boxes", boxes},
          {"chain", chain}};
}

}  // namespace nakayama

// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/decompose.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace nakayama {

CellTag cell_of(const StringLabel& label) {
  switch (label.family) {
    case Family::P:
    case Family::L: return {CellTag::Kind::kSplit, 0};
    case Family::W:
    case Family::S:
    case Family::N: return label.k == 0 ? CellTag{CellTag::Kind::kSplit, 0} : CellTag{CellTag::Kind::kValley, label.k};
    case Family::M: return label.k == 0 ? CellTag{CellTag::Kind::kM0, 0} : CellTag{CellTag::Kind::kValley, label.k};
  }
  return {};
}

namespace {

long height(const CellTag& c) {
  switch (c.kind) {
    case CellTag::Kind::kSplit: return 0;
    case CellTag::Kind::kM0: return 1;
    case CellTag::Kind::kValley: return 1 + c.k;
    case CellTag::Kind::kBand: return std::numeric_limits<long>::max();
  }
  return 0;
}

}  // namespace

bool strictly_greater(const CellTag& a, const CellTag& b) { return height(a) < height(b); }

std::string to_string(const CellTag& c) {
  switch (c.kind) {
    case CellTag::Kind::kSplit: return "J_split";
    case CellTag::Kind::kM0: return "J_M0";
    case CellTag::Kind::kValley: return "J_" + std::to_string(c.k);
    case CellTag::Kind::kBand: return "J_band";
  }
  return {};
}

Catalog::Catalog(int n, int max_valleys) : n_(n), max_valleys_(max_valleys) {
  if (n < 1) throw std::invalid_argument("Catalog: n must be at least 1");
  if (max_valleys < 0) throw std::invalid_argument("Catalog: negative valley bound");
  std::vector<StringLabel> all;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) all.push_back({Family::P, i, j, 0});
  for (int k = 0; k <= max_valleys; ++k)
    for (auto f : {Family::W, Family::S, Family::N, Family::M})
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) all.push_back({f, i, j, k});
  std::vector<Bimodule> mods;
  for (const auto& l : all) mods.push_back(construct(l, n));
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return mods[a].total_dimension() > mods[b].total_dimension(); });
  for (auto idx : order) {
    index_[all[idx]] = labels_.size();
    labels_.push_back(all[idx]);
    reps_.push_back(mods[idx].rep());
    bimodules_.push_back(std::move(mods[idx]));
  }
}

std::optional<std::size_t> Catalog::find(const StringLabel& label) const {
  auto it = index_.find(canonical(label, n_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CatalogPtr catalog(int n, int max_valleys) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, CatalogPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, max_valleys}];
  if (!slot) slot = std::make_shared<const Catalog>(n, max_valleys);
  return slot;
}

std::map<StringLabel, int> DecompositionReport::multiplicities() const {
  std::map<StringLabel, int> out;
  for (const auto& s : summands) ++out[s];
  return out;
}

std::map<StringLabel, int> DecompositionReport::in_cell(const CellTag& cell) const {
  std::map<StringLabel, int> out;
  for (const auto& s : summands)
    if (cell_of(s) == cell) ++out[s];
  return out;
}

DecompositionReport decompose(const Bimodule& t, const Catalog& cat, const SearchOptions& options) {
  if (t.n() != cat.n()) throw std::invalid_argument("decompose: catalog built for another n");
  const auto result = peel(t.rep(), cat.representations(), options);
  DecompositionReport out;
  for (const auto& s : result.summands) {
    out.summands.push_back(cat.label(s.candidate));
    out.split_pairs.push_back(s.pair);
  }
  out.residual = Bimodule(t.algebra_ptr(), result.residual);
  out.residual_inclusion = result.residual_inclusion;
  out.residual_projection = result.residual_projection;
  return out;
}

DecompositionReport decompose(const Bimodule& t, int max_valleys, const SearchOptions& options) {
  return decompose(t, *catalog(t.n(), max_valleys), options);
}

bool certify(const Bimodule& t, const Catalog& cat, const DecompositionReport& report) {
  PeelResult r;
  std::vector<Representation> parts;
  for (std::size_t a = 0; a < report.summands.size(); ++a) {
    auto idx = cat.find(report.summands[a]);
    if (!idx) return false;
    parts.push_back(cat.bimodule(*idx).rep());
    r.summands.push_back({a, report.split_pairs[a]});
  }
  r.residual = report.residual.rep();
  r.residual_inclusion = report.residual_inclusion;
  r.residual_projection = report.residual_projection;
  return certifies_decomposition(t.rep(), parts, r);
}

std::optional<SplitPair> split_pair_search(const Bimodule& x, const Bimodule& t, const SearchOptions& options) {
  return split_pair_search(x.rep(), t.rep(), options);
}

nlohmann::json to_json(const DecompositionReport& report) {
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& [label, mult] : report.multiplicities())
    summands.push_back({{"family", std::string(1, family_char(label.family))},
                        {"i", label.i},
                        {"j", label.j},
                        {"k", label.k},
                        {"label", to_string(label)},
                        {"multiplicity", mult},
                        {"cell", to_string(cell_of(label))}});
  return {{"summands", summands}, {"residual_dim", report.residual.total_dimension()}};
}

}  // namespace nakayama

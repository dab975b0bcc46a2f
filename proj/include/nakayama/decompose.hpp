// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_DECOMPOSE_HPP
#define NAKAYAMA_DECOMPOSE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nakayama/bimodule.hpp"

namespace nakayama {

/// Two-sided cell of a catalog member. Valley cells carry their k.
struct CellTag {
  enum class Kind { kSplit, kM0, kValley, kBand };
  Kind kind = Kind::kSplit;
  int k = 0;

  friend bool operator==(const CellTag&, const CellTag&) = default;
};

CellTag cell_of(const StringLabel& label);
/// True when a lies strictly above b in the chain split > M0 > J_1 > J_2 > ... > band.
bool strictly_greater(const CellTag& a, const CellTag& b);
std::string to_string(const CellTag& c);

/// All P, W, S, N, M with at most max_valleys valleys, largest dimension first
/// and in label order within a dimension.
class Catalog {
 public:
  Catalog(int n, int max_valleys);

  int n() const { return n_; }
  int max_valleys() const { return max_valleys_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<StringLabel>& labels() const { return labels_; }
  const StringLabel& label(std::size_t idx) const { return labels_[idx]; }
  const Bimodule& bimodule(std::size_t idx) const { return bimodules_[idx]; }
  const std::vector<Representation>& representations() const { return reps_; }
  /// Index of a label (any residues, L accepted), or nothing.
  std::optional<std::size_t> find(const StringLabel& label) const;

 private:
  int n_;
  int max_valleys_;
  std::vector<StringLabel> labels_;
  std::vector<Bimodule> bimodules_;
  std::vector<Representation> reps_;
  std::map<StringLabel, std::size_t> index_;
};

using CatalogPtr = std::shared_ptr<const Catalog>;
/// Shared catalog, built once per (n, max_valleys).
CatalogPtr catalog(int n, int max_valleys);

struct DecompositionReport {
  /// One entry per extracted summand, in extraction order.
  std::vector<StringLabel> summands;
  /// split_pairs[a] realises summands[a] inside the input.
  std::vector<SplitPair> split_pairs;
  Bimodule residual;
  Morphism residual_inclusion;
  Morphism residual_projection;

  std::map<StringLabel, int> multiplicities() const;
  bool has_residual() const { return !residual.is_zero(); }
  /// Multiplicities of summands in the given cell.
  std::map<StringLabel, int> in_cell(const CellTag& cell) const;
};

DecompositionReport decompose(const Bimodule& t, const Catalog& catalog, const SearchOptions& options = {});
DecompositionReport decompose(const Bimodule& t, int max_valleys, const SearchOptions& options = {});

/// Checks the recorded split pairs against the input.
bool certify(const Bimodule& t, const Catalog& catalog, const DecompositionReport& report);

std::optional<SplitPair> split_pair_search(const Bimodule& x, const Bimodule& t, const SearchOptions& options = {});

nlohmann::json to_json(const DecompositionReport& report);

}  // namespace nakayama

#endif  // NAKAYAMA_DECOMPOSE_HPP

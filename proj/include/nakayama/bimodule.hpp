// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_BIMODULE_HPP
#define NAKAYAMA_BIMODULE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nakayama/quiver_rep.hpp"
#include "nakayama/torus_algebra.hpp"

namespace nakayama {

/// A finite-dimensional bimodule, stored as a representation of the torus
/// quiver.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(TorusPtr algebra, Representation rep);

  static Bimodule zero(int n);

  int n() const { return algebra_->n(); }
  const TorusAlgebra& algebra() const { return *algebra_; }
  const TorusPtr& algebra_ptr() const { return algebra_; }
  const Representation& rep() const { return rep_; }

  std::size_t dim(int i, int j) const { return rep_.dim(algebra_->vertex(i, j)); }
  std::size_t total_dimension() const { return rep_.total_dimension(); }
  bool is_zero() const { return rep_.is_zero(); }
  const Matrix& vertical(int i, int j) const { return rep_.map(algebra_->vertical(i, j)); }
  const Matrix& horizontal(int i, int j) const { return rep_.map(algebra_->horizontal(i, j)); }
  bool satisfies_relations() const { return rep_.satisfies_relations(); }

 private:
  TorusPtr algebra_;
  Representation rep_;
};

enum class Family { P, L, W, S, N, M };

/// Catalog key of a string or projective-injective bimodule. For P and L the
/// valley count is zero.
struct StringLabel {
  Family family = Family::W;
  int i = 1;
  int j = 1;
  int k = 0;

  friend bool operator==(const StringLabel&, const StringLabel&) = default;
  friend auto operator<=>(const StringLabel&, const StringLabel&) = default;
};

/// L is stored as W with k = 0.
StringLabel canonical(const StringLabel& label, int n);

/// Literals look like "N:1|2:k=1", "P:2|1", "L:1|1".
StringLabel parse_label(std::string_view text);
std::string to_string(const StringLabel& label);
char family_char(Family f);

/// A step of a walk on the cover. Vertical steps go (a,b) -> (a+1,b);
/// horizontal steps go (a,b) -> (a,b-1).
struct WalkStep {
  std::size_t from = 0;
  std::size_t to = 0;
  bool vertical = true;
};

struct Walk {
  std::vector<CoverVertex> points;
  std::vector<WalkStep> steps;
};

Walk walk(const StringLabel& label);
/// Points with two incoming steps.
std::size_t valley_count(const Walk& w);

/// Pushes a walk forward to the torus; the basis at each vertex is in walk
/// order and every step becomes a 1 entry.
Bimodule push_forward(const Walk& w, int n);
Bimodule construct(const StringLabel& label, int n);

std::vector<Morphism> hom_basis(const Bimodule& x, const Bimodule& y);
bool is_isomorphic(const Bimodule& x, const Bimodule& y, const SearchOptions& options = {});
Bimodule direct_sum(const std::vector<Bimodule>& parts);

/// The k-linear dual, a bimodule again with (X*)_{i|j} = (X_{j|i})*.
Bimodule dualize(const Bimodule& x);

/// The algebra as a bimodule over itself.
Bimodule regular_bimodule(int n);

/// Indecomposable left modules: the projective cover of the simple at a vertex
/// or the simple itself.
struct LeftSummand {
  bool projective = false;
  int vertex = 1;
  friend bool operator==(const LeftSummand&, const LeftSummand&) = default;
  friend auto operator<=>(const LeftSummand&, const LeftSummand&) = default;
};

/// x as a left module, over the cyclic quiver.
Representation left_module(const Bimodule& x);
/// Indecomposable summands of x as a left module, sorted.
std::vector<LeftSummand> restrict_left(const Bimodule& x, const SearchOptions& options = {});
std::string to_string(const LeftSummand& s);

/// Hom over the left action from x to the algebra, as a bimodule with
/// (a f b)(m) = f(m a) b.
Bimodule hom_to_algebra(const Bimodule& x);

nlohmann::json to_json(const Bimodule& x);

}  // namespace nakayama

#endif  // NAKAYAMA_BIMODULE_HPP

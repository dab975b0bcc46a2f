// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_TORUS_ALGEBRA_HPP
#define NAKAYAMA_TORUS_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nakayama/quiver_rep.hpp"

namespace nakayama {

/// Residue of a in {1..n}.
int residue(long a, int n);

/// The radical-square-zero Nakayama algebra on the cyclic quiver with n
/// vertices. Basis: e_1..e_n (indices 0..n-1), then a_1..a_n (n..2n-1), with
/// a_i: i -> i+1. Products read right to left: e_{i+1} a_i = a_i = a_i e_i.
class NakayamaAlgebra {
 public:
  explicit NakayamaAlgebra(int n);

  int n() const { return n_; }
  std::size_t dimension() const { return 2 * static_cast<std::size_t>(n_); }
  std::size_t idempotent(int i) const { return static_cast<std::size_t>(residue(i, n_) - 1); }
  std::size_t arrow(int i) const { return static_cast<std::size_t>(n_ + residue(i, n_) - 1); }
  std::string basis_name(std::size_t b) const;

  /// Product of two basis elements: a basis index, or nothing for zero.
  std::optional<std::size_t> multiply(std::size_t a, std::size_t b) const;
  /// Product of two elements in coordinates.
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector unit() const;

  /// Q_n as a quiver with relations (all paths of length two vanish).
  const QuiverPtr& quiver() const { return quiver_; }

 private:
  int n_;
  QuiverPtr quiver_;
};

/// A vertex i|j of the torus, both indices in {1..n}.
struct TorusVertex {
  int i = 1;
  int j = 1;
  friend bool operator==(const TorusVertex&, const TorusVertex&) = default;
};

/// A vertex of the universal cover Z x Z.
struct CoverVertex {
  long a = 0;
  long b = 0;
  friend bool operator==(const CoverVertex&, const CoverVertex&) = default;
};

TorusVertex project(const CoverVertex& c, int n);

/// The enveloping algebra presented by the n x n torus quiver. Vertical arrow
/// v_{i|j}: i|j -> i+1|j (left multiplication by a_i); horizontal arrow
/// h_{i|j}: i|j -> i|j-1 (right multiplication by a_{j-1}).
class TorusAlgebra {
 public:
  explicit TorusAlgebra(int n);

  int n() const { return n_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(n_) * n_; }
  std::size_t vertex(int i, int j) const;
  std::size_t vertex(const TorusVertex& v) const { return vertex(v.i, v.j); }
  TorusVertex vertex_label(std::size_t v) const;
  std::size_t vertical(int i, int j) const { return vertex(i, j); }
  std::size_t horizontal(int i, int j) const { return vertex_count() + vertex(i, j); }
  bool is_vertical(std::size_t arrow) const { return arrow < vertex_count(); }
  /// Vertex at which an arrow starts.
  TorusVertex arrow_source(std::size_t arrow) const;

  const QuiverPtr& quiver() const { return quiver_; }
  const NakayamaAlgebra& base() const { return base_; }

 private:
  int n_;
  NakayamaAlgebra base_;
  QuiverPtr quiver_;
};

using TorusPtr = std::shared_ptr<const TorusAlgebra>;

/// Shared, lazily built torus algebra for each n.
TorusPtr torus(int n);

nlohmann::json to_json(const NakayamaAlgebra& algebra);
nlohmann::json to_json(const TorusAlgebra& algebra);

}  // namespace nakayama

#endif  // NAKAYAMA_TORUS_ALGEBRA_HPP

// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_TENSOR_HPP
#define NAKAYAMA_TENSOR_HPP

#include <vector>

#include "nakayama/bimodule.hpp"

namespace nakayama {

/// x (x)_A y together with its presentation. At vertex i|s the product space
/// is the sum over j of x_{i|j} (x) y_{j|s}, blocks ordered by j, Kronecker
/// order inside a block. The quotient basis is the set of free columns of
/// the reduced relation matrix.
struct TensorProduct {
  Bimodule result;
  /// Per torus vertex: product space -> quotient.
  std::vector<Matrix> projection;
  /// Per torus vertex: quotient -> product space, picking free columns.
  std::vector<Matrix> lift;
  /// Per torus vertex: dimension of the product space and rank of relations.
  std::vector<std::size_t> product_dims;
  std::vector<std::size_t> relation_ranks;
};

TensorProduct tensor_product(const Bimodule& x, const Bimodule& y);
Bimodule tensor(const Bimodule& x, const Bimodule& y);

/// id_x (x) f for f: y1 -> y2, in the quotient bases of both products.
Morphism tensor_map(const Bimodule& x, const TensorProduct& source, const TensorProduct& target, const Morphism& f);
Morphism tensor_map(const Bimodule& x, const Bimodule& y1, const Bimodule& y2, const Morphism& f);

}  // namespace nakayama

#endif  // NAKAYAMA_TENSOR_HPP

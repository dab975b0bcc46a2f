// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/tensor.hpp"

#include <stdexcept>

namespace nakayama {

namespace {

// Block-diagonal sum over j of kronecker(a_j, b_j).
template <typename Left, typename Right>
Matrix block_kronecker(int n, Left left, Right right) {
  std::vector<Matrix> blocks;
  std::size_t rows = 0, cols = 0;
  for (int j = 1; j <= n; ++j) {
    blocks.push_back(kronecker(left(j), right(j)));
    rows += blocks.back().rows();
    cols += blocks.back().cols();
  }
  Matrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace

TensorProduct tensor_product(const Bimodule& x, const Bimodule& y) {
  if (x.n() != y.n()) throw std::invalid_argument("tensor: algebras differ");
  const auto t = x.algebra_ptr();
  const int n = t->n();
  const std::size_t nv = t->vertex_count();
  TensorProduct out;
  out.projection.resize(nv);
  out.lift.resize(nv);
  out.product_dims.resize(nv);
  out.relation_ranks.resize(nv);
  std::vector<std::size_t> dims(nv);

  for (int i = 1; i <= n; ++i)
    for (int s = 1; s <= n; ++s) {
      std::vector<std::size_t> offset(n + 1, 0);
      for (int j = 1; j <= n; ++j) offset[j] = offset[j - 1] + x.dim(i, j) * y.dim(j, s);
      const std::size_t total = offset[n];
      std::size_t relations = 0;
      for (int j = 1; j <= n; ++j) relations += x.dim(i, j + 1) * y.dim(j, s);

      // Row per (x in x_{i|j+1}, y in y_{j|s}): (x a_j) (x) y - x (x) (a_j y).
      Matrix rel(relations, total);
      std::size_t row = 0;
      for (int j = 1; j <= n; ++j) {
        const std::size_t here = offset[j - 1];
        const std::size_t next = offset[residue(j + 1, n) - 1];
        const Matrix left = kronecker(x.horizontal(i, j + 1), Matrix::identity(y.dim(j, s)));
        const Matrix right = kronecker(Matrix::identity(x.dim(i, j + 1)), y.vertical(j, s));
        for (std::size_t c = 0; c < left.cols(); ++c, ++row) {
          for (std::size_t r = 0; r < left.rows(); ++r)
            if (sgn(left(r, c)) != 0) rel(row, here + r) += left(r, c);
          for (std::size_t r = 0; r < right.rows(); ++r)
            if (sgn(right(r, c)) != 0) rel(row, next + r) -= right(r, c);
        }
      }

      const auto red = row_reduce(rel);
      std::vector<bool> is_pivot(total, false);
      for (auto p : red.pivot_columns) is_pivot[p] = true;
      std::vector<std::size_t> free_cols;
      for (std::size_t c = 0; c < total; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

      const std::size_t v = t->vertex(i, s);
      Matrix lift(total, free_cols.size()), proj(free_cols.size(), total);
      for (std::size_t f = 0; f < free_cols.size(); ++f) {
        lift(free_cols[f], f) = 1;
        proj(f, free_cols[f]) = 1;
      }
      for (std::size_t r = 0; r < red.pivot_columns.size(); ++r)
        for (std::size_t f = 0; f < free_cols.size(); ++f) proj(f, red.pivot_columns[r]) = -red.reduced(r, free_cols[f]);
      out.lift[v] = std::move(lift);
      out.projection[v] = std::move(proj);
      out.product_dims[v] = total;
      out.relation_ranks[v] = red.pivot_columns.size();
      dims[v] = free_cols.size();
    }

  std::vector<Matrix> maps(2 * nv);
  for (int i = 1; i <= n; ++i)
    for (int s = 1; s <= n; ++s) {
      const std::size_t v = t->vertex(i, s);
      const Matrix up = block_kronecker(
          n, [&](int j) { return x.vertical(i, j); }, [&](int j) { return Matrix::identity(y.dim(j, s)); });
      const Matrix left = block_kronecker(
          n, [&](int j) { return Matrix::identity(x.dim(i, j)); }, [&](int j) { return y.horizontal(j, s); });
      maps[t->vertical(i, s)] = out.projection[t->vertex(i + 1, s)] * up * out.lift[v];
      maps[t->horizontal(i, s)] = out.projection[t->vertex(i, s - 1)] * left * out.lift[v];
    }
  out.result = Bimodule(t, Representation(t->quiver(), std::move(dims), std::move(maps)));
  return out;
}

Bimodule tensor(const Bimodule& x, const Bimodule& y) { return tensor_product(x, y).result; }

Morphism tensor_map(const Bimodule& x, const TensorProduct& source, const TensorProduct& target, const Morphism& f) {
  const auto& t = x.algebra();
  const int n = t.n();
  Morphism out;
  out.components.resize(t.vertex_count());
  for (int i = 1; i <= n; ++i)
    for (int s = 1; s <= n; ++s) {
      const std::size_t v = t.vertex(i, s);
      const Matrix block = block_kronecker(
          n, [&](int j) { return Matrix::identity(x.dim(i, j)); },
          [&](int j) { return f.components[t.vertex(j, s)]; });
      out.components[v] = target.projection[v] * block * source.lift[v];
    }
  return out;
}

Morphism tensor_map(const Bimodule& x, const Bimodule& y1, const Bimodule& y2, const Morphism& f) {
  return tensor_map(x, tensor_product(x, y1), tensor_product(x, y2), f);
}

}  // namespace nakayama

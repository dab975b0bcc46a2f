// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "nakayama/exact_linalg.hpp"

using nakayama::Matrix;
using nakayama::Scalar;
using nakayama::Vector;

namespace {

// Textbook rational elimination, kept deliberately simple.
std::size_t naive_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Scalar f = m(i, c) / m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound, int density) {
  std::uniform_int_distribution<long> value(-bound, bound);
  std::uniform_int_distribution<int> keep(0, 99);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng) < density) {
        m(r, c) = Scalar(value(rng), 1 + std::abs(value(rng)) % 5);
        m(r, c).canonicalize();
      }
  return m;
}

Matrix low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k, long bound) {
  return random_matrix(rng, rows, k, bound, 80) * random_matrix(rng, k, cols, bound, 80);
}

}  // namespace

TEST_CASE("rank and kernel of small matrices") {
  CHECK(nakayama::rank(Matrix{{1, 2}, {2, 4}}) == 1);
  auto ker = nakayama::kernel_basis(Matrix{{1, 1}});
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == -ker[0][1]);
  CHECK(ker[0][0] != 0);
  CHECK(nakayama::rank(Matrix(3, 4)) == 0);
  CHECK(nakayama::kernel_basis(Matrix(2, 3)).size() == 3);
  CHECK(nakayama::rank(Matrix::identity(5)) == 5);
}

TEST_CASE("row reduction is reduced echelon form") {
  auto rr = nakayama::row_reduce(Matrix{{0, 2, 4, 2}, {0, 1, 2, 3}, {0, 0, 0, 0}});
  CHECK(rr.pivot_columns == std::vector<std::size_t>{1, 3});
  CHECK(rr.reduced == Matrix{{0, 1, 2, 0}, {0, 0, 0, 1}});
}

TEST_CASE("solve and inverse") {
  Matrix a{{2, 1}, {1, 1}};
  auto inv = nakayama::inverse(a);
  REQUIRE(inv);
  CHECK((a * *inv).is_identity());
  CHECK_FALSE(nakayama::inverse(Matrix{{1, 2}, {2, 4}}));
  auto x = nakayama::solve(a, Vector{3, 2});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(nakayama::solve(Matrix{{1, 1}, {1, 1}}, Vector{1, 2}));
}

TEST_CASE("kronecker and direct sum shapes") {
  Matrix a{{1, 2}};
  Matrix b{{0, 1}, {1, 0}};
  auto k = nakayama::kronecker(a, b);
  CHECK(k == Matrix{{0, 1, 0, 2}, {1, 0, 2, 0}});
  auto d = nakayama::direct_sum(a, b);
  CHECK(d == Matrix{{1, 2, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

TEST_CASE("property: rank agrees with naive elimination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    Matrix m = (trial % 3 == 0) ? low_rank(rng, rows, cols, 1 + rng() % 4, 9)
                                : random_matrix(rng, rows, cols, trial % 2 ? 3 : 1000000, 40 + trial % 60);
    CAPTURE(nakayama::to_string(m));
    CHECK(nakayama::rank(m) == naive_rank(m));
  }
}

TEST_CASE("property: kernel vectors are annihilated and independent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
    Matrix m = low_rank(rng, rows, cols, 1 + rng() % 5, trial % 2 ? 4 : 1L << 40);
    auto ker = nakayama::kernel_basis(m);
    CHECK(ker.size() + nakayama::rank(m) == cols);
    for (const auto& v : ker) {
      for (const auto& x : m * v) CHECK(x == 0);
    }
    if (!ker.empty()) CHECK(naive_rank(Matrix::from_columns(ker, cols)) == ker.size());
  }
}

TEST_CASE("property: large entries force the multiprecision path") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(rng, 6, 6, 1L << 50, 100);
    CHECK(nakayama::rank(m) == naive_rank(m));
    if (auto inv = nakayama::inverse(m)) CHECK((m * *inv).is_identity());
  }
}

TEST_CASE("property: solve returns a solution exactly when one exists") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    Matrix m = low_rank(rng, rows, cols, 1 + rng() % 3, 6);
    Vector b(rows);
    for (auto& x : b) x = Scalar(static_cast<long>(rng() % 11) - 5);
    Matrix aug(rows, cols + 1);
    aug.set_block(0, 0, m);
    for (std::size_t r = 0; r < rows; ++r) aug(r, cols) = b[r];
    const bool consistent = naive_rank(aug) == naive_rank(m);
    auto x = nakayama::solve(m, b);
    CHECK(x.has_value() == consistent);
    if (x) CHECK(m * *x == b);
  }
}

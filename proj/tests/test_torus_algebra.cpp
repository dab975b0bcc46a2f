// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "nakayama/torus_algebra.hpp"

using namespace nakayama;

TEST_CASE("Nakayama algebra basics") {
  CHECK_THROWS(NakayamaAlgebra(0));
  NakayamaAlgebra dual_numbers(1);
  CHECK(dual_numbers.dimension() == 2);
  CHECK(dual_numbers.multiply(dual_numbers.arrow(1), dual_numbers.arrow(1)) == std::nullopt);
  CHECK(dual_numbers.multiply(dual_numbers.idempotent(1), dual_numbers.arrow(1)) == dual_numbers.arrow(1));

  NakayamaAlgebra two(2);
  CHECK(two.dimension() == 4);
  CHECK_FALSE(two.multiply(two.arrow(1), two.arrow(2)));
  CHECK_FALSE(two.multiply(two.arrow(2), two.arrow(1)));
  CHECK(two.multiply(two.idempotent(2), two.arrow(1)) == two.arrow(1));
  CHECK(two.multiply(two.arrow(1), two.idempotent(1)) == two.arrow(1));
  CHECK_FALSE(two.multiply(two.idempotent(1), two.arrow(1)));
}

TEST_CASE("property: multiplication is associative with unit and idempotents") {
  for (int n = 1; n <= 5; ++n) {
    NakayamaAlgebra alg(n);
    const auto d = alg.dimension();
    auto e = [&](std::size_t b) {
      Vector v(d);
      v[b] = 1;
      return v;
    };
    for (std::size_t a = 0; a < d; ++a) {
      CHECK(alg.multiply(alg.unit(), e(a)) == e(a));
      CHECK(alg.multiply(e(a), alg.unit()) == e(a));
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          CHECK(alg.multiply(alg.multiply(e(a), e(b)), e(c)) == alg.multiply(e(a), alg.multiply(e(b), e(c))));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK_FALSE(alg.multiply(alg.arrow(i), alg.arrow(j)));
        CHECK(alg.multiply(alg.idempotent(i), alg.idempotent(j)) ==
              (i == j ? std::optional(alg.idempotent(i)) : std::nullopt));
      }
    }
  }
}

TEST_CASE("unit is the sum of idempotents for n = 3") {
  NakayamaAlgebra alg(3);
  Vector sum(alg.dimension());
  for (int i = 1; i <= 3; ++i) sum[alg.idempotent(i)] += 1;
  CHECK(sum == alg.unit());
}

TEST_CASE("torus quiver counts") {
  CHECK_THROWS(TorusAlgebra(0));
  for (int n = 1; n <= 4; ++n) {
    TorusAlgebra t(n);
    const auto& q = *t.quiver();
    CHECK(q.vertex_count() == static_cast<std::size_t>(n * n));
    CHECK(q.arrows().size() == static_cast<std::size_t>(2 * n * n));
    CHECK(q.relations().size() == static_cast<std::size_t>(3 * n * n));
    std::size_t squares = 0;
    for (const auto& r : q.relations()) squares += r.terms.size() == 2;
    CHECK(squares == static_cast<std::size_t>(n * n));
  }
  TorusAlgebra one(1);
  const auto& q = *one.quiver();
  CHECK(q.arrow(0).source == q.arrow(0).target);
  CHECK(q.arrow(1).source == q.arrow(1).target);
}

TEST_CASE("arrow directions") {
  TorusAlgebra t(3);
  const auto& q = *t.quiver();
  CHECK(q.arrow(t.vertical(3, 2)).target == t.vertex(1, 2));
  CHECK(q.arrow(t.horizontal(2, 1)).target == t.vertex(2, 3));
  CHECK(t.vertex(4, 0) == t.vertex(1, 3));
}

TEST_CASE("projection from the cover") {
  CHECK(project({1, 1}, 3) == TorusVertex{1, 1});
  CHECK(project({4, 1}, 3) == TorusVertex{1, 1});
  CHECK(project({3, 0}, 2) == TorusVertex{1, 2});
  CHECK(project({-5, 7}, 3) == TorusVertex{1, 1});
}

TEST_CASE("json description") {
  auto j = to_json(TorusAlgebra(2));
  CHECK(j["vertices"].size() == 4);
  CHECK(j["arrows"].size() == 8);
  CHECK(j["relations"].size() == 12);
  CHECK(j["dimension"] == 16);
  auto a = to_json(NakayamaAlgebra(2));
  CHECK(a["basis"].size() == 4);
  CHECK(a["multiplication"][2][0] == "a1");
}

// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "nakayama/nakayama.h"

namespace {

struct Context {
  nkb_context* ctx = nullptr;
  Context() { REQUIRE(nkb_context_create(1, &ctx) == NKB_OK); }
  ~Context() { nkb_context_destroy(ctx); }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(nkb_status_name(NKB_OK)) == "ok");
  CHECK(std::string(nkb_status_name(NKB_ERR_VERIFICATION)) == "verification failed");
  CHECK(std::strlen(nkb_version()) > 0);
}

TEST_CASE("null handling") {
  CHECK(nkb_context_create(1, nullptr) == NKB_ERR_NULL);
  char* raw = nullptr;
  CHECK(nkb_algebra_report(nullptr, 2, &raw) == NKB_ERR_NULL);
  Context c;
  CHECK(nkb_algebra_report(c.ctx, 2, nullptr) == NKB_ERR_NULL);
  CHECK(nkb_bimodule_from_label(c.ctx, 2, nullptr, nullptr) == NKB_ERR_NULL);
  std::size_t d = 0;
  CHECK(nkb_bimodule_dimension(nullptr, &d) == NKB_ERR_NULL);
  CHECK(nkb_birep_rank(nullptr, &d) == NKB_ERR_NULL);
  CHECK(std::string(nkb_last_error(nullptr)).empty());
  nkb_bimodule_destroy(nullptr);
  nkb_birep_destroy(nullptr);
  nkb_string_free(nullptr);
}

TEST_CASE("invalid arguments report a message") {
  Context c;
  nkb_bimodule* x = nullptr;
  CHECK(nkb_bimodule_from_label(c.ctx, 2, "Q:1|1", &x) == NKB_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(nkb_last_error(c.ctx)) > 0);
  CHECK(nkb_bimodule_from_label(c.ctx, 0, "P:1|1", &x) == NKB_ERR_INVALID_ARGUMENT);
  nkb_birep* b = nullptr;
  CHECK(nkb_birep_cell(c.ctx, 2, 0, 1, &b) == NKB_ERR_INVALID_ARGUMENT);
  CHECK(nkb_birep_cell(c.ctx, 2, 1, 5, &b) == NKB_ERR_INVALID_ARGUMENT);
  char* raw = nullptr;
  CHECK(nkb_multable_report(c.ctx, 2, 0, &raw) == NKB_ERR_INVALID_ARGUMENT);
  const int bad[] = {3};
  CHECK(nkb_localize_report(c.ctx, 2, 1, 1, bad, 1, &raw) == NKB_ERR_INVALID_ARGUMENT);
  CHECK(nkb_localize_report(c.ctx, 2, 1, 1, nullptr, 1, &raw) == NKB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bimodule handles") {
  Context c;
  nkb_bimodule *x = nullptr, *y = nullptr, *t = nullptr, *z = nullptr;
  REQUIRE(nkb_bimodule_from_label(c.ctx, 2, "N:1|1:k=1", &x) == NKB_OK);
  REQUIRE(nkb_bimodule_from_label(c.ctx, 2, "N:1|2:k=1", &y) == NKB_OK);
  REQUIRE(nkb_bimodule_tensor(c.ctx, x, y, &t) == NKB_OK);
  std::size_t d = 0;
  CHECK(nkb_bimodule_dimension(x, &d) == NKB_OK);
  CHECK(d == 4);
  int iso = -1;
  CHECK(nkb_bimodule_is_isomorphic(c.ctx, t, y, &iso) == NKB_OK);
  CHECK(iso == 1);
  CHECK(nkb_bimodule_is_isomorphic(c.ctx, x, y, &iso) == NKB_OK);
  CHECK(iso == 0);
  char* raw = nullptr;
  REQUIRE(nkb_bimodule_json(c.ctx, x, &raw) == NKB_OK);
  CHECK(nlohmann::json::parse(raw).at("n") == 2);
  nkb_string_free(raw);
  REQUIRE(nkb_bimodule_from_label(c.ctx, 3, "W:1|1:k=1", &z) == NKB_OK);
  nkb_bimodule* bad = nullptr;
  CHECK(nkb_bimodule_tensor(c.ctx, x, z, &bad) != NKB_OK);
  // A residual is a failed verification, with the report still produced.
  REQUIRE(nkb_bimodule_decompose_json(c.ctx, t, 0, &raw) == NKB_ERR_VERIFICATION);
  CHECK(nlohmann::json::parse(raw).at("residual_dim") == 4);
  nkb_string_free(raw);
  for (auto* h : {x, y, t, z}) nkb_bimodule_destroy(h);
}

TEST_CASE("birep handles") {
  Context c;
  nkb_birep *b = nullptr, *l = nullptr;
  REQUIRE(nkb_birep_cell(c.ctx, 3, 1, 1, &b) == NKB_OK);
  std::size_t rank = 0;
  CHECK(nkb_birep_rank(b, &rank) == NKB_OK);
  CHECK(rank == 6);
  const int contract[] = {1, 3};
  REQUIRE(nkb_birep_localize(c.ctx, b, contract, 2, &l) == NKB_OK);
  CHECK(nkb_birep_rank(l, &rank) == NKB_OK);
  CHECK(rank == 4);
  int simple = 0;
  CHECK(nkb_birep_is_simple_transitive(l, &simple) == NKB_OK);
  CHECK(simple == 1);
  char* raw = nullptr;
  REQUIRE(nkb_birep_json(c.ctx, l, &raw) == NKB_OK);
  CHECK(nlohmann::json::parse(raw).at("contracted") == nlohmann::json{1, 3});
  nkb_string_free(raw);
  nkb_birep_destroy(l);
  nkb_birep_destroy(b);
}

TEST_CASE("seeds do not change results") {
  char* a = nullptr;
  char* b = nullptr;
  nkb_context *c1 = nullptr, *c2 = nullptr;
  REQUIRE(nkb_context_create(1, &c1) == NKB_OK);
  REQUIRE(nkb_context_create(99, &c2) == NKB_OK);
  REQUIRE(nkb_cellrep_report(c1, 2, 1, 1, &a) == NKB_OK);
  REQUIRE(nkb_cellrep_report(c2, 2, 1, 1, &b) == NKB_OK);
  CHECK(std::string(a) == std::string(b));
  nkb_string_free(a);
  nkb_string_free(b);
  nkb_context_destroy(c1);
  nkb_context_destroy(c2);
}

// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "nakayama/nakayama.h"

using nlohmann::json;

namespace {

// Enough of JSON Schema for the published report schemas: type, properties,
// required, additionalProperties, items, enum, minimum, minItems, pattern.
bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

void validate(const json& v, const json& schema, const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const auto& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) ok = has_type(v, t.get<std::string>());
    else
      for (const auto& alt : t) ok = ok || has_type(v, alt.get<std::string>());
    if (!ok) {
      errors.push_back(path + ": expected type " + t.dump() + ", got " + v.dump());
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema.at("enum")) found = found || e == v;
    if (!found) errors.push_back(path + ": value " + v.dump() + " not in enum");
  }
  if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema.at("minimum").get<double>())
    errors.push_back(path + ": below minimum");
  if (schema.contains("pattern") && v.is_string() &&
      !std::regex_search(v.get<std::string>(), std::regex(schema.at("pattern").get<std::string>())))
    errors.push_back(path + ": '" + v.get<std::string>() + "' does not match " + schema.at("pattern").get<std::string>());
  if (v.is_array()) {
    if (schema.contains("minItems") && v.size() < schema.at("minItems").get<std::size_t>())
      errors.push_back(path + ": too few items");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], schema.at("items"), path + "/" + std::to_string(i), errors);
  }
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto& r : schema.at("required"))
        if (!v.contains(r.get<std::string>())) errors.push_back(path + ": missing " + r.get<std::string>());
    const json props = schema.value("properties", json::object());
    for (const auto& [key, value] : v.items()) {
      if (props.contains(key)) {
        validate(value, props.at(key), path + "/" + key, errors);
        continue;
      }
      if (!schema.contains("additionalProperties")) continue;
      const auto& extra = schema.at("additionalProperties");
      if (extra.is_boolean()) {
        if (!extra.get<bool>()) errors.push_back(path + ": unexpected property " + key);
      } else {
        validate(value, extra, path + "/" + key, errors);
      }
    }
  }
}

json load_schema(const std::string& name) {
  std::ifstream in(std::string(NAKAYAMA_SCHEMA_DIR) + "/" + name + ".schema.json");
  REQUIRE(in.good());
  return json::parse(in);
}

std::vector<std::string> errors_for(const json& doc, const std::string& schema) {
  std::vector<std::string> errors;
  validate(doc, load_schema(schema), "", errors);
  return errors;
}

struct Context {
  nkb_context* ctx = nullptr;
  Context() { REQUIRE(nkb_context_create(7, &ctx) == NKB_OK); }
  ~Context() { nkb_context_destroy(ctx); }
};

json take(char* raw) {
  REQUIRE(raw != nullptr);
  json doc = json::parse(raw);
  nkb_string_free(raw);
  return doc;
}

void check_valid(const json& doc, const std::string& schema) {
  const auto errors = errors_for(doc, schema);
  for (const auto& e : errors) MESSAGE(schema << e);
  CHECK(errors.empty());
}

}  // namespace

TEST_CASE("validator rejects malformed documents") {
  const json schema = {{"type", "object"},
                       {"required", {"a"}},
                       {"additionalProperties", false},
                       {"properties", {{"a", {{"type", "array"}, {"items", {{"type", "integer"}, {"minimum", 1}}}}}}}};
  std::vector<std::string> errors;
  validate(json{{"a", {1, 2}}}, schema, "", errors);
  CHECK(errors.empty());
  validate(json{{"a", {0}}}, schema, "", errors);
  CHECK(errors.size() == 1);
  errors.clear();
  validate(json{{"b", 1}}, schema, "", errors);
  CHECK(errors.size() == 2);
  errors.clear();
  validate(json{{"a", "x"}}, schema, "", errors);
  CHECK(errors.size() == 1);
}

TEST_CASE("every report validates against its schema") {
  Context c;
  char* raw = nullptr;
  CHECK(nkb_algebra_report(c.ctx, 3, &raw) == NKB_OK);
  check_valid(take(raw), "algebra");
  CHECK(nkb_catalog_report(c.ctx, 2, 1, &raw) == NKB_OK);
  check_valid(take(raw), "catalog");
  CHECK(nkb_tensor_report(c.ctx, 2, "N:1|1:k=1", "M:1|2:k=1", &raw) == NKB_OK);
  check_valid(take(raw), "decomposition");
  CHECK(nkb_multable_report(c.ctx, 2, 1, &raw) == NKB_OK);
  check_valid(take(raw), "multable");
  CHECK(nkb_cells_report(c.ctx, 2, 1, &raw) == NKB_OK);
  check_valid(take(raw), "cells");
  CHECK(nkb_adjunction_report(c.ctx, 2, 1, &raw) == NKB_OK);
  check_valid(take(raw), "adjunction");
  CHECK(nkb_cellrep_report(c.ctx, 2, 1, 1, &raw) == NKB_OK);
  check_valid(take(raw), "birep");
  const int contract[] = {2};
  CHECK(nkb_localize_report(c.ctx, 2, 1, 1, contract, 1, &raw) == NKB_OK);
  check_valid(take(raw), "birep");
  CHECK(nkb_classify_report(c.ctx, 2, 1, &raw) == NKB_OK);
  check_valid(take(raw), "classify");

  nkb_bimodule* x = nullptr;
  REQUIRE(nkb_bimodule_from_label(c.ctx, 2, "P:1|2", &x) == NKB_OK);
  CHECK(nkb_bimodule_decompose_json(c.ctx, x, 0, &raw) == NKB_OK);
  check_valid(take(raw), "decomposition");
  nkb_bimodule_destroy(x);
}

TEST_CASE("classification counts in JSON") {
  Context c;
  char* raw = nullptr;
  REQUIRE(nkb_classify_report(c.ctx, 2, 1, &raw) == NKB_OK);
  CHECK(take(raw).at("counts") == json{{"2", 1}, {"3", 2}, {"4", 1}});
}

// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/nakayama.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "nakayama/birep.hpp"
#include "nakayama/reports.hpp"
#include "nakayama/tensor.hpp"

struct nkb_context {
  nakayama::SearchOptions options;
  std::string last_error;
};

struct nkb_bimodule {
  nakayama::Bimodule value;
};

struct nkb_birep {
  nakayama::FinitaryBirep value;
};

namespace {

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
nkb_status guarded(nkb_context* ctx, F&& body) {
  if (!ctx) return NKB_ERR_NULL;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return NKB_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    ctx->last_error = e.what();
    return NKB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return NKB_ERR_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown error";
    return NKB_ERR_INTERNAL;
  }
}

nkb_status emit(const nakayama::Report& r, char** out) {
  *out = copy_string(r.json.dump());
  if (!*out) return NKB_ERR_INTERNAL;
  return r.ok ? NKB_OK : NKB_ERR_VERIFICATION;
}

std::vector<int> as_vector(const int* values, std::size_t count) {
  if (count > 0 && !values) throw std::invalid_argument("contract list is null");
  return std::vector<int>(values, values + count);
}

}  // namespace

extern "C" {

const char* nkb_version(void) { return "1.0.0"; }

const char* nkb_status_name(nkb_status status) {
  switch (status) {
    case NKB_OK: return "ok";
    case NKB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NKB_ERR_VERIFICATION: return "verification failed";
    case NKB_ERR_INTERNAL: return "internal error";
    case NKB_ERR_NULL: return "null pointer";
  }
  return "unknown status";
}

nkb_status nkb_context_create(uint64_t seed, nkb_context** out) {
  if (!out) return NKB_ERR_NULL;
  try {
    *out = new nkb_context;
    (*out)->options.seed = seed;
    return NKB_OK;
  } catch (...) {
    return NKB_ERR_INTERNAL;
  }
}

void nkb_context_destroy(nkb_context* ctx) { delete ctx; }

const char* nkb_last_error(const nkb_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void nkb_string_free(char* s) { std::free(s); }

nkb_status nkb_bimodule_from_label(nkb_context* ctx, int n, const char* label, nkb_bimodule** out) {
  return guarded(ctx, [&] {
    if (!label || !out) return NKB_ERR_NULL;
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    *out = new nkb_bimodule{nakayama::construct(nakayama::parse_label(label), n)};
    return NKB_OK;
  });
}

nkb_status nkb_bimodule_tensor(nkb_context* ctx, const nkb_bimodule* x, const nkb_bimodule* y, nkb_bimodule** out) {
  return guarded(ctx, [&] {
    if (!x || !y || !out) return NKB_ERR_NULL;
    *out = new nkb_bimodule{nakayama::tensor(x->value, y->value)};
    return NKB_OK;
  });
}

nkb_status nkb_bimodule_dimension(const nkb_bimodule* x, size_t* out) {
  if (!x || !out) return NKB_ERR_NULL;
  *out = x->value.total_dimension();
  return NKB_OK;
}

nkb_status nkb_bimodule_is_isomorphic(nkb_context* ctx, const nkb_bimodule* x, const nkb_bimodule* y, int* out) {
  return guarded(ctx, [&] {
    if (!x || !y || !out) return NKB_ERR_NULL;
    *out = nakayama::is_isomorphic(x->value, y->value, ctx->options) ? 1 : 0;
    return NKB_OK;
  });
}

nkb_status nkb_bimodule_json(nkb_context* ctx, const nkb_bimodule* x, char** out) {
  return guarded(ctx, [&] {
    if (!x || !out) return NKB_ERR_NULL;
    return emit({nakayama::to_json(x->value), true}, out);
  });
}

nkb_status nkb_bimodule_decompose_json(nkb_context* ctx, const nkb_bimodule* x, int max_valleys, char** out) {
  return guarded(ctx, [&] {
    if (!x || !out) return NKB_ERR_NULL;
    if (max_valleys < 0) throw std::invalid_argument("max_valleys must be nonnegative");
    const auto r = nakayama::decompose(x->value, max_valleys, ctx->options);
    return emit({nakayama::to_json(r), !r.has_residual()}, out);
  });
}

void nkb_bimodule_destroy(nkb_bimodule* x) { delete x; }

nkb_status nkb_birep_cell(nkb_context* ctx, int n, int k, int j, nkb_birep** out) {
  return guarded(ctx, [&] {
    if (!out) return NKB_ERR_NULL;
    *out = new nkb_birep{nakayama::cell_birep(n, k, j, ctx->options)};
    return NKB_OK;
  });
}

nkb_status nkb_birep_localize(nkb_context* ctx, const nkb_birep* b, const int* contract, size_t count,
                              nkb_birep** out) {
  return guarded(ctx, [&] {
    if (!b || !out) return NKB_ERR_NULL;
    *out = new nkb_birep{nakayama::localize(b->value, as_vector(contract, count))};
    return NKB_OK;
  });
}

nkb_status nkb_birep_rank(const nkb_birep* b, size_t* out) {
  if (!b || !out) return NKB_ERR_NULL;
  *out = b->value.rank();
  return NKB_OK;
}

nkb_status nkb_birep_is_simple_transitive(const nkb_birep* b, int* out) {
  if (!b || !out) return NKB_ERR_NULL;
  try {
    *out = nakayama::is_simple_transitive(b->value) ? 1 : 0;
    return NKB_OK;
  } catch (...) {
    return NKB_ERR_INTERNAL;
  }
}

nkb_status nkb_birep_json(nkb_context* ctx, const nkb_birep* b, char** out) {
  return guarded(ctx, [&] {
    if (!b || !out) return NKB_ERR_NULL;
    return emit({nakayama::to_json(b->value), true}, out);
  });
}

void nkb_birep_destroy(nkb_birep* b) { delete b; }

nkb_status nkb_algebra_report(nkb_context* ctx, int n, char** out) {
  return guarded(ctx, [&] { return out ? emit(nakayama::algebra_report(n), out) : NKB_ERR_NULL; });
}

nkb_status nkb_catalog_report(nkb_context* ctx, int n, int max_valleys, char** out) {
  return guarded(ctx,
                 [&] { return out ? emit(nakayama::catalog_report(n, max_valleys, ctx->options), out) : NKB_ERR_NULL; });
}

nkb_status nkb_tensor_report(nkb_context* ctx, int n, const char* u, const char* v, char** out) {
  return guarded(ctx, [&] {
    if (!u || !v || !out) return NKB_ERR_NULL;
    return emit(nakayama::tensor_report(n, u, v, ctx->options), out);
  });
}

nkb_status nkb_multable_report(nkb_context* ctx, int n, int k, char** out) {
  return guarded(ctx, [&] { return out ? emit(nakayama::multable_report(n, k, ctx->options), out) : NKB_ERR_NULL; });
}

nkb_status nkb_cells_report(nkb_context* ctx, int n, int max_valleys, char** out) {
  return guarded(ctx,
                 [&] { return out ? emit(nakayama::cells_report(n, max_valleys, ctx->options), out) : NKB_ERR_NULL; });
}

nkb_status nkb_adjunction_report(nkb_context* ctx, int n, int k, char** out) {
  return guarded(ctx, [&] { return out ? emit(nakayama::adjunction_report(n, k, ctx->options), out) : NKB_ERR_NULL; });
}

nkb_status nkb_cellrep_report(nkb_context* ctx, int n, int k, int j, char** out) {
  return guarded(ctx, [&] { return out ? emit(nakayama::cellrep_report(n, k, j, ctx->options), out) : NKB_ERR_NULL; });
}

nkb_status nkb_localize_report(nkb_context* ctx, int n, int k, int j, const int* contract, size_t count, char** out) {
  return guarded(ctx, [&] {
    if (!out) return NKB_ERR_NULL;
    return emit(nakayama::localize_report(n, k, j, as_vector(contract, count), ctx->options), out);
  });
}

nkb_status nkb_classify_report(nkb_context* ctx, int n, int k, char** out) {
  return guarded(ctx, [&] { return out ? emit(nakayama::classify_report(n, k, ctx->options), out) : NKB_ERR_NULL; });
}

}  // extern "C"

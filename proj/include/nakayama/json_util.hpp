// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_JSON_UTIL_HPP
#define NAKAYAMA_JSON_UTIL_HPP

#include "json.hpp"
#include "nakayama/exact_linalg.hpp"

namespace nakayama {

/// Integers become JSON numbers; other rationals become "p/q" strings.
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json matrix_json(const Matrix& m);

}  // namespace nakayama

#endif  // NAKAYAMA_JSON_UTIL_HPP

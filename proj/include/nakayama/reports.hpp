// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_REPORTS_HPP
#define NAKAYAMA_REPORTS_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "nakayama/quiver_rep.hpp"

namespace nakayama {

/// Output of one frontend command: a JSON document and whether every
/// verification inside it passed.
struct Report {
  nlohmann::json json;
  bool ok = true;
};

Report algebra_report(int n);
/// P and every W, S, N, M with at most max_valleys valleys.
Report catalog_report(int n, int max_valleys, const SearchOptions& options = {});
/// Decomposition of u (x) v; fails when a residual remains.
Report tensor_report(int n, const std::string& u, const std::string& v, const SearchOptions& options = {});
/// All products of pairs in J_k against the expected table, plus the
/// F (x) F identities.
Report multable_report(int n, int k, const SearchOptions& options = {});
Report cells_report(int n, int max_valleys, const SearchOptions& options = {});
/// Left restriction and hom to the algebra of every S^{(k)}_{i|j}.
Report adjunction_report(int n, int k, const SearchOptions& options = {});
Report cellrep_report(int n, int k, int j, const SearchOptions& options = {});
Report localize_report(int n, int k, int j, const std::vector<int>& contract, const SearchOptions& options = {});
Report classify_report(int n, int k, const SearchOptions& options = {});

}  // namespace nakayama

#endif  // NAKAYAMA_REPORTS_HPP

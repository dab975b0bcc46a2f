// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/torus_algebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace nakayama {

int residue(long a, int n) {
  if (n <= 0) throw std::invalid_argument("residue: n must be positive");
  long r = (a - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r + 1);
}

namespace {

QuiverPtr cyclic_quiver(int n) {
  std::vector<std::string> names;
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) {
    names.push_back(std::to_string(i));
    arrows.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(residue(i + 1, n) - 1),
                      "a" + std::to_string(i)});
  }
  std::vector<Relation> relations;
  for (int i = 1; i <= n; ++i)
    relations.push_back({{PathTerm{1, {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(residue(i + 1, n) - 1)}}}});
  return std::make_shared<Quiver>(std::move(names), std::move(arrows), std::move(relations));
}

}  // namespace

NakayamaAlgebra::NakayamaAlgebra(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("NakayamaAlgebra: n must be at least 1");
  quiver_ = cyclic_quiver(n);
}

std::string NakayamaAlgebra::basis_name(std::size_t b) const {
  const auto idx = std::to_string(b % n_ + 1);
  return (b < static_cast<std::size_t>(n_) ? "e" : "a") + idx;
}

std::optional<std::size_t> NakayamaAlgebra::multiply(std::size_t a, std::size_t b) const {
  const std::size_t n = n_;
  const bool a_idem = a < n, b_idem = b < n;
  const int ia = static_cast<int>(a % n) + 1, ib = static_cast<int>(b % n) + 1;
  if (a_idem && b_idem) return ia == ib ? std::optional(a) : std::nullopt;
  if (a_idem) return residue(ib + 1, n_) == ia ? std::optional(b) : std::nullopt;  // e_x a_i
  if (b_idem) return ia == ib ? std::optional(a) : std::nullopt;                   // a_i e_x
  return std::nullopt;
}

Vector NakayamaAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out(dimension());
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (sgn(a[x]) == 0) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (sgn(b[y]) == 0) continue;
      if (auto p = multiply(x, y)) out[*p] += a[x] * b[y];
    }
  }
  return out;
}

Vector NakayamaAlgebra::unit() const {
  Vector u(dimension());
  for (int i = 0; i < n_; ++i) u[i] = 1;
  return u;
}

TorusVertex project(const CoverVertex& c, int n) { return {residue(c.a, n), residue(c.b, n)}; }

TorusAlgebra::TorusAlgebra(int n) : n_(n), base_(n) {
  std::vector<std::string> names(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const auto t = vertex_label(v);
    names[v] = std::to_string(t.i) + "|" + std::to_string(t.j);
  }
  std::vector<Arrow> arrows(2 * vertex_count());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      arrows[vertical(i, j)] = {vertex(i, j), vertex(i + 1, j), "v" + names[vertex(i, j)]};
      arrows[horizontal(i, j)] = {vertex(i, j), vertex(i, j - 1), "h" + names[vertex(i, j)]};
    }
  std::vector<Relation> relations;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) relations.push_back({{PathTerm{1, {vertical(i, j), vertical(i + 1, j)}}}});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) relations.push_back({{PathTerm{1, {horizontal(i, j), horizontal(i, j - 1)}}}});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      relations.push_back({{PathTerm{1, {vertical(i, j), horizontal(i + 1, j)}},
                            PathTerm{-1, {horizontal(i, j), vertical(i, j - 1)}}}});
  quiver_ = std::make_shared<Quiver>(std::move(names), std::move(arrows), std::move(relations));
}

std::size_t TorusAlgebra::vertex(int i, int j) const {
  return static_cast<std::size_t>(residue(i, n_) - 1) * n_ + static_cast<std::size_t>(residue(j, n_) - 1);
}

TorusVertex TorusAlgebra::vertex_label(std::size_t v) const {
  return {static_cast<int>(v / n_) + 1, static_cast<int>(v % n_) + 1};
}

TorusVertex TorusAlgebra::arrow_source(std::size_t arrow) const { return vertex_label(arrow % vertex_count()); }

TorusPtr torus(int n) {
  static std::mutex mutex;
  static std::map<int, TorusPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const TorusAlgebra>(n);
  return slot;
}

namespace {

nlohmann::json quiver_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}});
  nlohmann::json relations = nlohmann::json::array();
  for (const auto& r : q.relations()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r.terms) {
      nlohmann::json path = nlohmann::json::array();
      for (auto a : t.arrows) path.push_back(q.arrow(a).name);
      terms.push_back({{"coefficient", t.coefficient.get_str()}, {"path", path}});
    }
    relations.push_back(terms);
  }
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) vertices.push_back(q.vertex_name(v));
  return {{"vertices", vertices}, {"arrows", arrows}, {"relations", relations}};
}

}  // namespace

nlohmann::json to_json(const NakayamaAlgebra& algebra) {
  auto out = quiver_json(*algebra.quiver());
  out["n"] = algebra.n();
  out["dimension"] = algebra.dimension();
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t b = 0; b < algebra.dimension(); ++b) basis.push_back(algebra.basis_name(b));
  out["basis"] = basis;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t a = 0; a < algebra.dimension(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < algebra.dimension(); ++b) {
      auto p = algebra.multiply(a, b);
      row.push_back(p ? nlohmann::json(algebra.basis_name(*p)) : nlohmann::json(nullptr));
    }
    table.push_back(row);
  }
  out["multiplication"] = table;
  return out;
}

nlohmann::json to_json(const TorusAlgebra& algebra) {
  auto out = quiver_json(*algebra.quiver());
  out["n"] = algebra.n();
  out["dimension"] = 4 * algebra.vertex_count();
  return out;
}

}  // namespace nakayama

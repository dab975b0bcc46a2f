// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/bimodule.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "nakayama/json_util.hpp"

namespace nakayama {

Bimodule::Bimodule(TorusPtr algebra, Representation rep) : algebra_(std::move(algebra)), rep_(std::move(rep)) {
  if (!algebra_) throw std::invalid_argument("Bimodule: null algebra");
  if (rep_.quiver_ptr() != algebra_->quiver()) throw std::invalid_argument("Bimodule: representation of another quiver");
}

Bimodule Bimodule::zero(int n) {
  auto t = torus(n);
  return Bimodule(t, Representation::zero(t->quiver()));
}

char family_char(Family f) {
  static constexpr char kChars[] = {'P', 'L', 'W', 'S', 'N', 'M'};
  return kChars[static_cast<int>(f)];
}

StringLabel canonical(const StringLabel& label, int n) {
  StringLabel out = label;
  out.i = residue(label.i, n);
  out.j = residue(label.j, n);
  if (out.family == Family::L) {
    out.family = Family::W;
    out.k = 0;
  }
  if (out.family == Family::P) out.k = 0;
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view text) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("bad label: " + std::string(text));
  return v;
}

}  // namespace

StringLabel parse_label(std::string_view text) {
  StringLabel out;
  const auto c1 = text.find(':');
  if (c1 != 1) throw std::invalid_argument("bad label: " + std::string(text));
  switch (text[0]) {
    case 'P': out.family = Family::P; break;
    case 'L': out.family = Family::L; break;
    case 'W': out.family = Family::W; break;
    case 'S': out.family = Family::S; break;
    case 'N': out.family = Family::N; break;
    case 'M': out.family = Family::M; break;
    default: throw std::invalid_argument("bad label family: " + std::string(text));
  }
  auto rest = text.substr(2);
  const auto c2 = rest.find(':');
  auto vertex = rest.substr(0, c2);
  const auto bar = vertex.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("bad label vertex: " + std::string(text));
  out.i = parse_int(vertex.substr(0, bar), text);
  out.j = parse_int(vertex.substr(bar + 1), text);
  const bool has_k = out.family != Family::P && out.family != Family::L;
  if (c2 == std::string_view::npos) {
    if (has_k) throw std::invalid_argument("label needs a valley count: " + std::string(text));
    return out;
  }
  auto kpart = rest.substr(c2 + 1);
  if (!has_k || kpart.substr(0, 2) != "k=") throw std::invalid_argument("bad label valley count: " + std::string(text));
  out.k = parse_int(kpart.substr(2), text);
  if (out.k < 0) throw std::invalid_argument("negative valley count: " + std::string(text));
  return out;
}

std::string to_string(const StringLabel& label) {
  std::string s(1, family_char(label.family));
  s += ":" + std::to_string(label.i) + "|" + std::to_string(label.j);
  if (label.family != Family::P && label.family != Family::L) s += ":k=" + std::to_string(label.k);
  return s;
}

Walk walk(const StringLabel& raw) {
  if (raw.k < 0) throw std::invalid_argument("walk: negative valley count");
  const StringLabel label = raw.family == Family::L ? StringLabel{Family::W, raw.i, raw.j, 0} : raw;
  const long i = label.i, j = label.j;
  Walk w;
  if (label.family == Family::P) {
    w.points = {{i, j - 1}, {i, j}, {i + 1, j - 1}, {i + 1, j}};
    w.steps = {{1, 3, true}, {0, 2, true}, {1, 0, false}, {3, 2, false}};
    return w;
  }
  const long k = label.k;
  for (long m = 0; m <= k; ++m) {
    w.points.push_back({i + m, j + m});
    if (m < k) w.points.push_back({i + m + 1, j + m});
  }
  for (long m = 0; m < k; ++m) {
    w.steps.push_back({static_cast<std::size_t>(2 * m), static_cast<std::size_t>(2 * m + 1), true});
    w.steps.push_back({static_cast<std::size_t>(2 * m + 2), static_cast<std::size_t>(2 * m + 1), false});
  }
  if (label.family == Family::S || label.family == Family::M) {
    w.points.push_back({i + k + 1, j + k});
    w.steps.push_back({static_cast<std::size_t>(2 * k), w.points.size() - 1, true});
  }
  if (label.family == Family::N || label.family == Family::M) {
    w.points.push_back({i, j - 1});
    w.steps.push_back({0, w.points.size() - 1, false});
  }
  return w;
}

std::size_t valley_count(const Walk& w) {
  std::vector<int> indegree(w.points.size(), 0);
  for (const auto& s : w.steps) ++indegree[s.to];
  return static_cast<std::size_t>(std::count(indegree.begin(), indegree.end(), 2));
}

Bimodule push_forward(const Walk& w, int n) {
  auto t = torus(n);
  const auto& q = *t->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::vector<std::size_t> vertex_of(w.points.size()), slot(w.points.size());
  for (std::size_t p = 0; p < w.points.size(); ++p) {
    vertex_of[p] = t->vertex(project(w.points[p], n));
    slot[p] = dims[vertex_of[p]]++;
  }
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  for (const auto& s : w.steps) {
    const auto& from = w.points[s.from];
    const auto& to = w.points[s.to];
    if (s.vertical ? (to.a != from.a + 1 || to.b != from.b) : (to.a != from.a || to.b != from.b - 1))
      throw std::logic_error("push_forward: step does not follow an arrow");
    const auto tv = project(from, n);
    const std::size_t arrow = s.vertical ? t->vertical(tv.i, tv.j) : t->horizontal(tv.i, tv.j);
    maps[arrow](slot[s.to], slot[s.from]) = 1;
  }
  return Bimodule(t, Representation(t->quiver(), std::move(dims), std::move(maps)));
}

Bimodule construct(const StringLabel& label, int n) { return push_forward(walk(label), n); }

std::vector<Morphism> hom_basis(const Bimodule& x, const Bimodule& y) { return hom_basis(x.rep(), y.rep()); }

bool is_isomorphic(const Bimodule& x, const Bimodule& y, const SearchOptions& options) {
  return x.n() == y.n() && is_isomorphic(x.rep(), y.rep(), options);
}

Bimodule direct_sum(const std::vector<Bimodule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
  std::vector<Representation> reps;
  for (const auto& p : parts) reps.push_back(p.rep());
  return Bimodule(parts.front().algebra_ptr(), direct_sum(parts.front().algebra().quiver(), reps).sum);
}

Bimodule dualize(const Bimodule& x) {
  const auto& t = x.algebra();
  const int n = t.n();
  std::vector<std::size_t> dims(t.vertex_count());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) dims[t.vertex(i, j)] = x.dim(j, i);
  std::vector<Matrix> maps(2 * t.vertex_count());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      maps[t.vertical(i, j)] = x.horizontal(j, i + 1).transpose();
      maps[t.horizontal(i, j)] = x.vertical(j - 1, i).transpose();
    }
  return Bimodule(x.algebra_ptr(), Representation(t.quiver(), std::move(dims), std::move(maps)));
}

namespace {

// Span of algebra basis elements placed at given vertices; each arrow acts by
// multiplication, arrow_element(a) on the left or the right.
template <typename VertexOf, typename ActArrow>
Representation span_of_elements(const QuiverPtr& q, const std::vector<std::size_t>& elements, VertexOf vertex_of,
                                 ActArrow act) {
  std::vector<std::size_t> dims(q->vertex_count(), 0), slot(elements.size());
  for (std::size_t e = 0; e < elements.size(); ++e) slot[e] = dims[vertex_of(elements[e])]++;
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  for (std::size_t a = 0; a < q->arrows().size(); ++a) {
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (vertex_of(elements[e]) != q->arrow(a).source) continue;
      auto image = act(a, elements[e]);
      if (!image) continue;
      auto it = std::find(elements.begin(), elements.end(), *image);
      if (it == elements.end()) throw std::logic_error("span_of_elements: image leaves the span");
      maps[a](slot[it - elements.begin()], slot[e]) = 1;
    }
  }
  return Representation(q, std::move(dims), std::move(maps));
}

// The left ideal generated by e_b, as a representation of the cyclic quiver.
Representation left_projective(const NakayamaAlgebra& alg, int b) {
  const int n = alg.n();
  auto vertex_of = [&](std::size_t e) -> std::size_t {
    return e < alg.dimension() / 2 ? e : static_cast<std::size_t>(residue(static_cast<long>(e - n) + 2, n) - 1);
  };
  return span_of_elements(alg.quiver(), {alg.idempotent(b), alg.arrow(b)}, vertex_of,
                          [&](std::size_t a, std::size_t e) { return alg.multiply(alg.arrow(static_cast<int>(a) + 1), e); });
}

Representation left_simple(const NakayamaAlgebra& alg, int b) {
  std::vector<std::size_t> dims(alg.n(), 0);
  dims[residue(b, alg.n()) - 1] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : alg.quiver()->arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  return Representation(alg.quiver(), std::move(dims), std::move(maps));
}

// Column a of x as a left module.
Representation column(const Bimodule& x, int a) {
  const auto& alg = x.algebra().base();
  const int n = alg.n();
  std::vector<std::size_t> dims(n);
  std::vector<Matrix> maps;
  for (int i = 1; i <= n; ++i) {
    dims[i - 1] = x.dim(i, a);
    maps.push_back(x.vertical(i, a));
  }
  return Representation(alg.quiver(), std::move(dims), std::move(maps));
}

Matrix coordinate_matrix(const std::vector<Morphism>& images, const std::vector<Morphism>& basis) {
  Matrix m(basis.size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    auto coords = coordinates(basis, images[c]);
    if (!coords) throw std::logic_error("coordinate_matrix: image outside the target space");
    for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = (*coords)[r];
  }
  return m;
}

}  // namespace

Bimodule regular_bimodule(int n) {
  auto t = torus(n);
  const auto& alg = t->base();
  std::vector<std::size_t> elements;
  for (std::size_t e = 0; e < alg.dimension(); ++e) elements.push_back(e);
  auto vertex_of = [&](std::size_t e) {
    const int idx = static_cast<int>(e % n) + 1;
    return e < static_cast<std::size_t>(n) ? t->vertex(idx, idx) : t->vertex(idx + 1, idx);
  };
  auto act = [&](std::size_t a, std::size_t e) -> std::optional<std::size_t> {
    const auto src = t->arrow_source(a);
    if (t->is_vertical(a)) return alg.multiply(alg.arrow(src.i), e);
    return alg.multiply(e, alg.arrow(src.j - 1));
  };
  return Bimodule(t, span_of_elements(t->quiver(), elements, vertex_of, act));
}

Representation left_module(const Bimodule& x) {
  const auto& alg = x.algebra().base();
  const int n = alg.n();
  std::vector<std::size_t> dims(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) dims[i - 1] += x.dim(i, j);
  std::vector<Matrix> maps;
  for (int i = 1; i <= n; ++i) {
    Matrix m(dims[residue(i + 1, n) - 1], dims[i - 1]);
    std::size_t ro = 0, co = 0;
    for (int j = 1; j <= n; ++j) {
      m.set_block(ro, co, x.vertical(i, j));
      ro += x.dim(i + 1, j);
      co += x.dim(i, j);
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg.quiver(), std::move(dims), std::move(maps));
}

std::vector<LeftSummand> restrict_left(const Bimodule& x, const SearchOptions& options) {
  const auto& alg = x.algebra().base();
  std::vector<Representation> candidates;
  std::vector<LeftSummand> names;
  for (int b = 1; b <= alg.n(); ++b) {
    candidates.push_back(left_projective(alg, b));
    names.push_back({true, b});
  }
  for (int b = 1; b <= alg.n(); ++b) {
    candidates.push_back(left_simple(alg, b));
    names.push_back({false, b});
  }
  const auto result = peel(left_module(x), candidates, options);
  if (!result.residual.is_zero()) throw std::logic_error("restrict_left: unrecognised left summand");
  std::vector<LeftSummand> out;
  for (const auto& s : result.summands) out.push_back(names[s.candidate]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const LeftSummand& s) {
  return (s.projective ? "Pe" : "S") + std::to_string(s.vertex);
}

Bimodule hom_to_algebra(const Bimodule& x) {
  auto t = x.algebra_ptr();
  const auto& alg = t->base();
  const int n = t->n();
  std::vector<Representation> columns, projectives;
  for (int a = 1; a <= n; ++a) {
    columns.push_back(column(x, a));
    projectives.push_back(left_projective(alg, a));
  }
  // rho_b: right multiplication by a_{b-1}, from Lambda e_b to Lambda e_{b-1}.
  // In Lambda e_b the element e_b sits at vertex b and a_b at vertex b+1; they
  // share a vertex only when n = 1, with e_b first.
  auto slot = [&](std::size_t which) -> std::size_t { return n == 1 ? which : 0; };
  std::vector<Morphism> rho(n);
  for (int b = 1; b <= n; ++b) {
    const auto& src = projectives[b - 1];
    const auto& dst = projectives[residue(b - 1, n) - 1];
    const std::size_t src_elems[2] = {alg.idempotent(b), alg.arrow(b)};
    Morphism m = zero_morphism(src, dst);
    for (std::size_t e = 0; e < 2; ++e) {
      auto image = alg.multiply(src_elems[e], alg.arrow(b - 1));
      if (!image) continue;
      const std::size_t d = *image == alg.idempotent(b - 1) ? 0 : 1;
      const std::size_t vertex = static_cast<std::size_t>(e == 0 ? b : residue(b + 1, n)) - 1;
      m.components[vertex](slot(d), slot(e)) = 1;
    }
    if (!is_morphism(src, dst, m)) throw std::logic_error("hom_to_algebra: right multiplication is not left linear");
    rho[b - 1] = std::move(m);
  }

  std::vector<std::vector<std::vector<Morphism>>> basis(n, std::vector<std::vector<Morphism>>(n));
  std::vector<std::size_t> dims(t->vertex_count());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      basis[a - 1][b - 1] = hom_basis(columns[a - 1], projectives[b - 1]);
      dims[t->vertex(a, b)] = basis[a - 1][b - 1].size();
    }
  std::vector<Matrix> maps(2 * t->vertex_count());
  for (int a = 1; a <= n; ++a) {
    // Right multiplication by a_a on x, from column a+1 to column a.
    Morphism h;
    for (int i = 1; i <= n; ++i) h.components.push_back(x.horizontal(i, a + 1));
    for (int b = 1; b <= n; ++b) {
      const auto& here = basis[a - 1][b - 1];
      std::vector<Morphism> up, left;
      for (const auto& f : here) {
        up.push_back(compose(f, h));
        left.push_back(compose(rho[b - 1], f));
      }
      maps[t->vertical(a, b)] = coordinate_matrix(up, basis[residue(a + 1, n) - 1][b - 1]);
      maps[t->horizontal(a, b)] = coordinate_matrix(left, basis[a - 1][residue(b - 1, n) - 1]);
    }
  }
  return Bimodule(t, Representation(t->quiver(), std::move(dims), std::move(maps)));
}

nlohmann::json to_json(const Bimodule& x) {
  const auto& t = x.algebra();
  const auto& q = *t.quiver();
  nlohmann::json dims = nlohmann::json::object();
  for (std::size_t v = 0; v < t.vertex_count(); ++v)
    if (x.rep().dim(v) > 0) dims[q.vertex_name(v)] = x.rep().dim(v);
  nlohmann::json arrows = nlohmann::json::array();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& m = x.rep().map(a);
    if (m.empty() || m.is_zero()) continue;
    arrows.push_back({{"arrow", q.arrow(a).name}, {"matrix", matrix_json(m)}});
  }
  return {{"n", t.n()}, {"dims", dims}, {"arrows", arrows}};
}

}  // namespace nakayama

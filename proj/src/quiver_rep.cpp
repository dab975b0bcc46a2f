// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/quiver_rep.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace nakayama {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows, std::vector<Relation> relations)
    : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)), relations_(std::move(relations)) {
  for (const auto& a : arrows_)
    if (a.source >= vertex_names_.size() || a.target >= vertex_names_.size())
      throw std::invalid_argument("Quiver: arrow endpoint out of range");
}

Representation::Representation(QuiverPtr quiver, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw std::invalid_argument("Representation: null quiver");
  if (dims_.size() != quiver_->vertex_count()) throw std::invalid_argument("Representation: wrong vertex count");
  if (maps_.size() != quiver_->arrows().size()) throw std::invalid_argument("Representation: wrong arrow count");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arr = quiver_->arrow(a);
    if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source])
      throw std::invalid_argument("Representation: arrow matrix has wrong shape");
  }
}

Representation Representation::zero(QuiverPtr quiver) {
  const std::size_t nv = quiver->vertex_count();
  std::vector<Matrix> maps(quiver->arrows().size());
  return Representation(std::move(quiver), std::vector<std::size_t>(nv, 0), std::move(maps));
}

std::size_t Representation::total_dimension() const {
  std::size_t d = 0;
  for (auto x : dims_) d += x;
  return d;
}

Matrix Representation::path_matrix(std::size_t start, const std::vector<std::size_t>& arrows) const {
  Matrix m = Matrix::identity(dims_[start]);
  std::size_t at = start;
  for (auto a : arrows) {
    const auto& arr = quiver_->arrow(a);
    if (arr.source != at) throw std::invalid_argument("path_matrix: path is not composable");
    m = maps_[a] * m;
    at = arr.target;
  }
  return m;
}

bool Representation::satisfies_relations() const {
  for (const auto& rel : quiver_->relations()) {
    if (rel.terms.empty()) continue;
    const auto& first = rel.terms.front();
    const std::size_t start = quiver_->arrow(first.arrows.front()).source;
    const std::size_t end = quiver_->arrow(first.arrows.back()).target;
    Matrix sum(dims_[end], dims_[start]);
    for (const auto& term : rel.terms) sum = sum + term.coefficient * path_matrix(start, term.arrows);
    if (!sum.is_zero()) return false;
  }
  return true;
}

Morphism identity_morphism(const Representation& x) {
  Morphism f;
  for (auto d : x.dims()) f.components.push_back(Matrix::identity(d));
  return f;
}

Morphism zero_morphism(const Representation& x, const Representation& y) {
  Morphism f;
  for (std::size_t v = 0; v < x.dims().size(); ++v) f.components.emplace_back(y.dim(v), x.dim(v));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.components.size() != f.components.size()) throw std::invalid_argument("compose: vertex count mismatch");
  Morphism h;
  h.components.reserve(f.components.size());
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(f.components[v] + g.components[v]);
  return h;
}

Morphism scale(const Scalar& s, const Morphism& f) {
  Morphism h;
  for (const auto& c : f.components) h.components.push_back(s * c);
  return h;
}

bool is_zero(const Morphism& f) {
  for (const auto& c : f.components)
    if (!c.is_zero()) return false;
  return true;
}

bool is_morphism(const Representation& x, const Representation& y, const Morphism& f) {
  const auto& q = x.quiver();
  if (f.components.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (f.components[v].rows() != y.dim(v) || f.components[v].cols() != x.dim(v)) return false;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(f.components[arr.target] * x.map(a) == y.map(a) * f.components[arr.source])) return false;
  }
  return true;
}

bool is_isomorphism(const Morphism& f) {
  for (const auto& c : f.components)
    if (!is_invertible(c)) return false;
  return true;
}

std::optional<Morphism> inverse(const Morphism& f) {
  Morphism g;
  for (const auto& c : f.components) {
    auto inv = nakayama::inverse(c);
    if (!inv) return std::nullopt;
    g.components.push_back(std::move(*inv));
  }
  return g;
}

Vector flatten(const Morphism& f) {
  Vector v;
  for (const auto& c : f.components)
    for (const auto& x : c.data()) v.push_back(x);
  return v;
}

std::vector<Morphism> hom_basis(const Representation& x, const Representation& y) {
  const auto& q = x.quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + y.dim(v) * x.dim(v);
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};

  std::size_t equations = 0;
  for (const auto& arr : q.arrows()) equations += y.dim(arr.target) * x.dim(arr.source);

  // Row (a, r, c): sum_m F_w[r][m] X_a[m][c] - sum_m Y_a[r][m] F_v[m][c] = 0.
  Matrix system(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    const std::size_t v = arr.source, w = arr.target;
    const std::size_t xv = x.dim(v), xw = x.dim(w), yv = y.dim(v), yw = y.dim(w);
    const Matrix& xa = x.map(a);
    const Matrix& ya = y.map(a);
    for (std::size_t r = 0; r < yw; ++r) {
      for (std::size_t c = 0; c < xv; ++c, ++row) {
        for (std::size_t m = 0; m < xw; ++m)
          if (sgn(xa(m, c)) != 0) system(row, offset[w] + r * xw + m) += xa(m, c);
        for (std::size_t m = 0; m < yv; ++m)
          if (sgn(ya(r, m)) != 0) system(row, offset[v] + m * xv + c) -= ya(r, m);
      }
    }
  }

  std::vector<Morphism> basis;
  for (const auto& vec : kernel_basis(system)) {
    Morphism f;
    f.components.reserve(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix m(y.dim(v), x.dim(v));
      for (std::size_t r = 0; r < y.dim(v); ++r)
        for (std::size_t c = 0; c < x.dim(v); ++c) m(r, c) = vec[offset[v] + r * x.dim(v) + c];
      f.components.push_back(std::move(m));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

std::optional<Vector> coordinates(const std::vector<Morphism>& basis, const Morphism& f) {
  const Vector target = flatten(f);
  if (basis.empty()) {
    for (const auto& x : target)
      if (sgn(x) != 0) return std::nullopt;
    return Vector{};
  }
  std::vector<Vector> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(flatten(b));
  return solve(Matrix::from_columns(cols, target.size()), target);
}

DirectSum direct_sum(QuiverPtr quiver, const std::vector<Representation>& parts) {
  const auto& q = *quiver;
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix m(dims[arr.target], dims[arr.source]);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      m.set_block(ro, co, p.map(a));
      ro += p.dim(arr.target);
      co += p.dim(arr.source);
    }
    maps.push_back(std::move(m));
  }
  DirectSum out{Representation(quiver, dims, std::move(maps)), {}, {}};
  std::vector<std::size_t> offset(nv, 0);
  for (const auto& p : parts) {
    Morphism inc, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(dims[v], p.dim(v));
      Matrix r(p.dim(v), dims[v]);
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i(offset[v] + k, k) = 1;
        r(k, offset[v] + k) = 1;
      }
      inc.components.push_back(std::move(i));
      proj.components.push_back(std::move(r));
      offset[v] += p.dim(v);
    }
    out.inclusions.push_back(std::move(inc));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

Retract image_of_idempotent(const Representation& x, const Morphism& e) {
  const auto& q = x.quiver();
  const std::size_t nv = q.vertex_count();
  Retract out;
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const Matrix& ev = e.components[v];
    const auto pivots = column_space_pivots(ev);
    Matrix inc(x.dim(v), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
      for (std::size_t r = 0; r < x.dim(v); ++r) inc(r, k) = ev(r, pivots[k]);
    // Rows where the inclusion has full rank give a left inverse.
    const auto rows = column_space_pivots(inc.transpose());
    Matrix square(pivots.size(), pivots.size());
    Matrix erows(pivots.size(), x.dim(v));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (std::size_t c = 0; c < pivots.size(); ++c) square(k, c) = inc(rows[k], c);
      for (std::size_t c = 0; c < x.dim(v); ++c) erows(k, c) = ev(rows[k], c);
    }
    auto inv = nakayama::inverse(square);
    if (!inv) throw std::logic_error("image_of_idempotent: inclusion is not injective");
    dims[v] = pivots.size();
    out.inclusion.components.push_back(std::move(inc));
    out.projection.components.push_back(*inv * erows);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    maps.push_back(out.projection.components[arr.target] * x.map(a) * out.inclusion.components[arr.source]);
  }
  out.part = Representation(x.quiver_ptr(), std::move(dims), std::move(maps));
  return out;
}

namespace {

// Multivariate polynomial with rational coefficients; exponent vectors are
// padded to a common length by the caller.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;

  Polynomial() = default;
  static Polynomial constant(const Scalar& c, std::size_t vars) {
    Polynomial p;
    if (sgn(c) != 0) p.terms_[Monomial(vars, 0)] = c;
    return p;
  }
  static Polynomial variable(std::size_t k, std::size_t vars, const Scalar& c = 1) {
    Polynomial p;
    Monomial m(vars, 0);
    m[k] = 1;
    if (sgn(c) != 0) p.terms_[m] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
      auto& slot = terms_[m];
      slot += c;
      if (sgn(slot) == 0) terms_.erase(m);
    }
    return *this;
  }
  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        auto& slot = p.terms_[m];
        slot += ca * cb;
        if (sgn(slot) == 0) p.terms_.erase(m);
      }
    return p;
  }

 private:
  std::map<Monomial, Scalar> terms_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Division-free determinant (Berkowitz): characteristic polynomial of the
// leading principal submatrices built up one row and column at a time.
Polynomial berkowitz_determinant(const PolyMatrix& a, std::size_t vars) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(1, vars);
  std::vector<Polynomial> p{Polynomial::constant(1, vars)};
  for (std::size_t k = 0; k < n; ++k) {
    // a_k = [[A, C], [R, akk]] with A the leading k x k block.
    std::vector<Polynomial> c(k + 2);
    c[0] = Polynomial::constant(1, vars);
    c[1] = -a[k][k];
    std::vector<Polynomial> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = a[i][k];
    for (std::size_t m = 2; m <= k + 1; ++m) {
      Polynomial s;
      for (std::size_t i = 0; i < k; ++i) s += a[k][i] * col[i];
      c[m] = -s;
      std::vector<Polynomial> next(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += a[i][j] * col[j];
      col = std::move(next);
    }
    std::vector<Polynomial> q(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= k && j <= i; ++j) q[i] += c[i - j] * p[j];
    p = std::move(q);
  }
  return p[n];  // equals (-1)^n det, which is zero iff det is
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

Scalar random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, 97);
  return Scalar(dist(rng));
}

Morphism random_combination(const std::vector<Morphism>& basis, std::mt19937_64& rng) {
  Morphism f = scale(random_coefficient(rng), basis.front());
  for (std::size_t b = 1; b < basis.size(); ++b) f = add(f, scale(random_coefficient(rng), basis[b]));
  return f;
}

SplitPair normalise(const Morphism& section, const Morphism& retraction, SplitEvidence evidence) {
  auto inv = inverse(compose(retraction, section));
  if (!inv) throw std::logic_error("split pair: composite is not invertible");
  return SplitPair{section, compose(*inv, retraction), evidence};
}

}  // namespace

bool generic_determinant_nonzero(const std::vector<Matrix>& forms) {
  if (forms.empty()) return false;
  const std::size_t n = forms.front().rows();
  const std::size_t vars = forms.size();
  PolyMatrix a(n, std::vector<Polynomial>(n));
  for (std::size_t k = 0; k < vars; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(forms[k](r, c)) != 0) a[r][c] += Polynomial::variable(k, vars, forms[k](r, c));
  return !berkowitz_determinant(a, vars).is_zero();
}

namespace {

Scalar trace_of_composite(const Morphism& g, const Morphism& f) {
  Scalar tr = 0;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    const Matrix& a = g.components[v];
    const Matrix& b = f.components[v];
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (sgn(a(r, c)) != 0 && sgn(b(c, r)) != 0) tr += a(r, c) * b(c, r);
  }
  return tr;
}

}  // namespace

bool has_local_endomorphism_ring(const Representation& x) {
  if (x.is_zero()) return false;
  const auto e = hom_basis(x, x);
  Matrix gram(e.size(), e.size());
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a; b < e.size(); ++b) gram(a, b) = gram(b, a) = trace_of_composite(e[a], e[b]);
  return rank(gram) == 1;
}

std::optional<SplitPair> split_pair_search(const Representation& x, const Representation& t,
                                           const SearchOptions& options) {
  if (x.is_zero()) return SplitPair{zero_morphism(x, t), zero_morphism(t, x), SplitEvidence::kBasisPair};
  for (std::size_t v = 0; v < x.dims().size(); ++v)
    if (x.dim(v) > t.dim(v)) return std::nullopt;
  const auto into = hom_basis(x, t);
  if (into.empty()) return std::nullopt;
  const auto back = hom_basis(t, x);
  if (back.empty()) return std::nullopt;

  // With End(x) local, a composite is invertible exactly when its trace is
  // nonzero, and x is a summand exactly when some basis composite is.
  if (has_local_endomorphism_ring(x)) {
    for (const auto& s : into)
      for (const auto& r : back)
        if (sgn(trace_of_composite(r, s)) != 0) return normalise(s, r, SplitEvidence::kBasisPair);
    return std::nullopt;
  }

  std::vector<Morphism> composites;
  composites.reserve(into.size() * back.size());
  for (const auto& s : into)
    for (const auto& r : back) {
      auto c = compose(r, s);
      if (is_isomorphism(c)) return normalise(s, r, SplitEvidence::kBasisPair);
      composites.push_back(std::move(c));
    }

  auto rng = make_rng(options.seed);
  for (int attempt = 0; attempt < options.random_attempts; ++attempt) {
    auto s = random_combination(into, rng);
    auto r = random_combination(back, rng);
    if (is_isomorphism(compose(r, s))) return normalise(s, r, SplitEvidence::kRandomCombination);
  }

  // The composites span a two-sided ideal of End(x). If the identity is not
  // in it, no composite is invertible.
  if (!coordinates(composites, identity_morphism(x))) return std::nullopt;

  // Identity lies in the ideal, so x is a summand of some power of t; for a
  // local End(x) a basis pair would already have succeeded. Decide by the
  // generic composite sum_ab s_a r_b (back_b into_a).
  const std::size_t vars = into.size() + back.size();
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    const std::size_t d = x.dim(v);
    if (d == 0) continue;
    PolyMatrix a(d, std::vector<Polynomial>(d));
    for (std::size_t i = 0; i < into.size(); ++i)
      for (std::size_t j = 0; j < back.size(); ++j) {
        const Matrix& c = composites[i * back.size() + j].components[v];
        const auto st = Polynomial::variable(i, vars) * Polynomial::variable(into.size() + j, vars);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t col = 0; col < d; ++col)
            if (sgn(c(r, col)) != 0) a[r][col] += st * Polynomial::constant(c(r, col), vars);
      }
    if (berkowitz_determinant(a, vars).is_zero()) return std::nullopt;
  }
  // A nonzero generic determinant guarantees some integer point works; widen
  // the random search until one is found.
  auto wide = make_rng(options.seed ^ 0x9e3779b97f4a7c15ull);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    auto s = random_combination(into, wide);
    auto r = random_combination(back, wide);
    if (is_isomorphism(compose(r, s))) return normalise(s, r, SplitEvidence::kGenericCombination);
  }
  throw std::runtime_error("split_pair_search: generic composite is invertible but no witness was found");
}

bool is_isomorphic(const Representation& x, const Representation& y, const SearchOptions& options) {
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  const auto basis = hom_basis(x, y);
  if (basis.empty()) return false;
  for (const auto& f : basis)
    if (is_isomorphism(f)) return true;
  auto rng = make_rng(options.seed);
  for (int attempt = 0; attempt < options.random_attempts; ++attempt)
    if (is_isomorphism(random_combination(basis, rng))) return true;
  // Cheap necessary conditions before the symbolic test.
  if (hom_basis(y, x).size() != basis.size()) return false;
  if (hom_basis(x, x).size() != basis.size() || hom_basis(y, y).size() != basis.size()) return false;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    if (x.dim(v) == 0) continue;
    std::vector<Matrix> forms;
    forms.reserve(basis.size());
    for (const auto& f : basis) forms.push_back(f.components[v]);
    if (!generic_determinant_nonzero(forms)) return false;
  }
  return true;
}

PeelResult peel(const Representation& t, std::span<const Representation> candidates, const SearchOptions& options) {
  PeelResult out;
  out.residual = t;
  out.residual_inclusion = identity_morphism(t);
  out.residual_projection = identity_morphism(t);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto& x = candidates[c];
    if (x.is_zero()) continue;
    while (!out.residual.is_zero()) {
      bool fits = true;
      for (std::size_t v = 0; v < x.dims().size(); ++v)
        if (x.dim(v) > out.residual.dim(v)) fits = false;
      if (!fits) break;
      auto pair = split_pair_search(x, out.residual, options);
      if (!pair) break;
      // Record against t, then pass to the complement ker(section o retraction).
      out.summands.push_back(PeeledSummand{
          c, SplitPair{compose(out.residual_inclusion, pair->section),
                       compose(pair->retraction, out.residual_projection), pair->evidence}});
      const Morphism e = compose(pair->section, pair->retraction);
      Morphism complement = identity_morphism(out.residual);
      for (std::size_t v = 0; v < complement.components.size(); ++v)
        complement.components[v] = complement.components[v] - e.components[v];
      auto rest = image_of_idempotent(out.residual, complement);
      out.residual_inclusion = compose(out.residual_inclusion, rest.inclusion);
      out.residual_projection = compose(rest.projection, out.residual_projection);
      out.residual = std::move(rest.part);
    }
  }
  return out;
}

bool certifies_decomposition(const Representation& t, std::span<const Representation> candidates,
                             const PeelResult& result) {
  std::size_t dim = result.residual.total_dimension();
  for (const auto& s : result.summands) dim += candidates[s.candidate].total_dimension();
  if (dim != t.total_dimension()) return false;
  Morphism sum = compose(result.residual_inclusion, result.residual_projection);
  for (std::size_t a = 0; a < result.summands.size(); ++a) {
    const auto& sa = result.summands[a];
    const auto& xa = candidates[sa.candidate];
    if (!is_morphism(xa, t, sa.pair.section) || !is_morphism(t, xa, sa.pair.retraction)) return false;
    sum = add(sum, compose(sa.pair.section, sa.pair.retraction));
    for (std::size_t b = 0; b < result.summands.size(); ++b) {
      const auto c = compose(result.summands[b].pair.retraction, sa.pair.section);
      if (a == b ? !(c == identity_morphism(xa)) : !is_zero(c)) return false;
    }
    if (!is_zero(compose(result.residual_projection, sa.pair.section))) return false;
  }
  if (!(compose(result.residual_projection, result.residual_inclusion) == identity_morphism(result.residual)))
    return false;
  return sum == identity_morphism(t);
}

}  // namespace nakayama

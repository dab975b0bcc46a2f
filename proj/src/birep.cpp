// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/birep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nakayama/json_util.hpp"
#include "nakayama/tensor.hpp"

namespace nakayama {

std::string to_string(const BirepObject& o) {
  const char* prefix = o.kind == BirepObject::Kind::kN ? "N" : o.kind == BirepObject::Kind::kM ? "M" : "NM";
  return prefix + std::to_string(o.component);
}

std::optional<std::size_t> FinitaryBirep::object_index(BirepObject::Kind kind, int component) const {
  for (std::size_t x = 0; x < objects.size(); ++x)
    if (objects[x].component == component &&
        (objects[x].kind == kind || objects[x].kind == BirepObject::Kind::kMerged))
      return x;
  return std::nullopt;
}

std::optional<std::size_t> FinitaryBirep::generator_index(const StringLabel& label) const {
  const auto c = canonical(label, n);
  for (std::size_t g = 0; g < generators.size(); ++g)
    if (generators[g] == c) return g;
  return std::nullopt;
}

std::optional<std::size_t> FinitaryBirep::arrow_between(std::size_t source, std::size_t target) const {
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].source == source && arrows[a].target == target) return a;
  return std::nullopt;
}

std::size_t FinitaryBirep::hom_dimension(std::size_t source, std::size_t target) const {
  if (source == target) return 1;
  return arrow_between(source, target) ? 1 : 0;
}

std::vector<std::size_t> FinitaryBirep::slots(std::size_t g, std::size_t x) const {
  std::vector<std::size_t> out;
  const Matrix& a = action[g];
  for (std::size_t y = 0; y < objects.size(); ++y)
    for (long m = 0; m < a(y, x).get_num().get_si(); ++m) out.push_back(y);
  return out;
}

namespace {

// Hom(X, Y) modulo maps factoring through the given objects.
class QuotientHom {
 public:
  QuotientHom(const Bimodule& x, const Bimodule& y, const Catalog& factors, const CellTag& apex) {
    ambient_ = hom_basis(x, y);
    const std::size_t bound = x.total_dimension() + y.total_dimension();
    std::vector<Vector> generators;
    if (!ambient_.empty()) {
      for (std::size_t z = 0; z < factors.size(); ++z) {
        if (!strictly_greater(cell_of(factors.label(z)), apex)) continue;
        const auto& zm = factors.bimodule(z);
        if (zm.total_dimension() > bound) continue;
        const auto into = hom_basis(x, zm);
        if (into.empty()) continue;
        const auto out = hom_basis(zm, y);
        for (const auto& f : into)
          for (const auto& g : out) generators.push_back(ambient_coordinates(compose(g, f)));
      }
    }
    if (!generators.empty()) {
      const auto red = row_reduce(Matrix::from_columns(generators, ambient_.size()).transpose());
      for (std::size_t r = 0; r < red.pivot_columns.size(); ++r) ideal_.push_back(red.reduced.row(r));
    }
  }

  std::size_t ambient_dimension() const { return ambient_.size(); }
  std::size_t dimension() const { return ambient_.size() - ideal_.size(); }
  const std::vector<Morphism>& ambient() const { return ambient_; }

  Vector ambient_coordinates(const Morphism& f) const {
    auto c = coordinates(ambient_, f);
    if (!c) throw std::logic_error("QuotientHom: not a morphism of the expected modules");
    return *c;
  }

  bool in_ideal(const Morphism& f) const {
    if (ambient_.empty()) return true;
    const auto c = ambient_coordinates(f);
    if (ideal_.empty()) return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return sgn(s) == 0; });
    return solve(Matrix::from_columns(ideal_, ambient_.size()), c).has_value();
  }

  void set_representative(const Morphism& f) {
    if (in_ideal(f)) throw std::runtime_error("cell birep: chosen basis morphism vanishes in the quotient");
    representative_ = ambient_coordinates(f);
  }

  /// c with f = c * representative modulo the ideal.
  Scalar coefficient(const Morphism& f) const {
    if (dimension() == 0) {
      if (!in_ideal(f)) throw std::logic_error("QuotientHom: nonzero class in a zero space");
      return 0;
    }
    std::vector<Vector> cols{*representative_};
    cols.insert(cols.end(), ideal_.begin(), ideal_.end());
    auto sol = solve(Matrix::from_columns(cols, ambient_.size()), ambient_coordinates(f));
    if (!sol) throw std::logic_error("QuotientHom: class outside the quotient span");
    return (*sol)[0];
  }

 private:
  std::vector<Morphism> ambient_;
  std::vector<Vector> ideal_;
  std::optional<Vector> representative_;
};

bool is_epimorphism(const Morphism& f, const Bimodule& target) {
  for (std::size_t v = 0; v < f.components.size(); ++v)
    if (rank(f.components[v]) != target.rep().dim(v)) return false;
  return true;
}

void normalise_first_entry(Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) {
        const Scalar s = 1 / Scalar(m(r, c));
        m = s * m;
        return;
      }
}

}  // namespace

FinitaryBirep cell_birep(int n, int k, int j, const SearchOptions& options, CartanData* cartan) {
  if (n < 1) throw std::invalid_argument("cell_birep: n must be at least 1");
  if (k < 1) throw std::invalid_argument("cell_birep: k must be at least 1");
  if (j < 1 || j > n) throw std::invalid_argument("cell_birep: j must lie in 1..n");
  FinitaryBirep b;
  b.n = n;
  b.k = k;
  b.j = j;
  std::vector<Bimodule> mods;
  for (auto kind : {BirepObject::Kind::kN, BirepObject::Kind::kM})
    for (int i = 1; i <= n; ++i) {
      b.objects.push_back({kind, i});
      mods.push_back(construct({kind == BirepObject::Kind::kN ? Family::N : Family::M, i, j, k}, n));
    }
  const std::size_t objects = b.objects.size();
  const CellTag apex{CellTag::Kind::kValley, k};
  const auto factors = catalog(n, k - 1);

  std::vector<std::vector<std::unique_ptr<QuotientHom>>> homs(objects);
  CartanData data;
  data.ambient.assign(objects, std::vector<std::size_t>(objects));
  data.quotient = data.ambient;
  std::string mismatch;
  for (std::size_t x = 0; x < objects; ++x)
    for (std::size_t y = 0; y < objects; ++y) {
      homs[x].push_back(std::make_unique<QuotientHom>(mods[x], mods[y], *factors, apex));
      data.ambient[x][y] = homs[x][y]->ambient_dimension();
      data.quotient[x][y] = homs[x][y]->dimension();
      const bool arrow = b.objects[x].kind == BirepObject::Kind::kM && b.objects[y].kind == BirepObject::Kind::kN &&
                         b.objects[x].component == b.objects[y].component;
      const std::size_t expected = (x == y || arrow) ? 1 : 0;
      if (data.quotient[x][y] != expected)
        mismatch += " dim Hom(" + to_string(b.objects[x]) + "," + to_string(b.objects[y]) +
                    ")=" + std::to_string(data.quotient[x][y]);
    }
  if (cartan) *cartan = data;
  if (!mismatch.empty()) throw std::runtime_error("cell birep: Cartan data is not of type A2^n:" + mismatch);

  std::vector<Morphism> alpha(n);
  for (std::size_t x = 0; x < objects; ++x) homs[x][x]->set_representative(identity_morphism(mods[x].rep()));
  for (int i = 1; i <= n; ++i) {
    const std::size_t m = static_cast<std::size_t>(n + i - 1), nn = static_cast<std::size_t>(i - 1);
    const auto& q = *homs[m][nn];
    std::optional<Morphism> epi;
    for (const auto& f : q.ambient())
      if (is_epimorphism(f, mods[nn]) && !q.in_ideal(f)) {
        epi = f;
        break;
      }
    if (!epi) throw std::runtime_error("cell birep: no epimorphism M -> N in component " + std::to_string(i));
    homs[m][nn]->set_representative(*epi);
    alpha[i - 1] = *epi;
    b.arrows.push_back({m, nn, i});
  }

  const auto cat = catalog(n, k);
  for (auto f : {Family::W, Family::S, Family::N, Family::M})
    for (int i = 1; i <= n; ++i)
      for (int s = 1; s <= n; ++s) b.generators.push_back({f, i, s, k});

  for (const auto& label : b.generators) {
    const auto u = construct(label, n);
    Matrix act(objects, objects);
    std::vector<TensorProduct> products;
    // Per object: split pairs of the valley-cell summands, sorted by object.
    std::vector<std::vector<std::pair<std::size_t, SplitPair>>> parts(objects);
    for (std::size_t x = 0; x < objects; ++x) {
      products.push_back(tensor_product(u, mods[x]));
      const auto report = decompose(products.back().result, *cat, options);
      if (report.has_residual()) throw std::runtime_error("cell birep: unrecognised summand in " + to_string(label) + " (x) " + to_string(b.objects[x]));
      for (std::size_t s = 0; s < report.summands.size(); ++s) {
        const auto& z = report.summands[s];
        if (!(cell_of(z) == apex)) continue;
        if (z.j != j || (z.family != Family::N && z.family != Family::M))
          throw std::runtime_error("cell birep: summand " + to_string(z) + " leaves the left cell");
        const std::size_t y = (z.family == Family::N ? 0 : n) + static_cast<std::size_t>(z.i - 1);
        act(y, x) += 1;
        parts[x].push_back({y, report.split_pairs[s]});
      }
      std::stable_sort(parts[x].begin(), parts[x].end(),
                       [](const auto& a, const auto& c) { return a.first < c.first; });
    }
    b.action.push_back(act);

    std::vector<ArrowImage> images;
    for (const auto& arrow : b.arrows) {
      const auto t = tensor_map(u, products[arrow.source], products[arrow.target], alpha[arrow.component - 1]);
      ArrowImage image;
      for (const auto& p : parts[arrow.source]) image.source_slots.push_back(p.first);
      for (const auto& p : parts[arrow.target]) image.target_slots.push_back(p.first);
      image.coefficients = Matrix(image.target_slots.size(), image.source_slots.size());
      for (std::size_t r = 0; r < image.target_slots.size(); ++r)
        for (std::size_t c = 0; c < image.source_slots.size(); ++c) {
          const auto& [zc, pc] = parts[arrow.source][c];
          const auto& [zr, pr] = parts[arrow.target][r];
          const auto component = compose(pr.retraction, compose(t, pc.section));
          image.coefficients(r, c) = homs[zc][zr]->coefficient(component);
        }
      normalise_first_entry(image.coefficients);
      images.push_back(std::move(image));
    }
    b.arrow_images.push_back(std::move(images));
  }
  return b;
}

Matrix action_matrix(const FinitaryBirep& b, const StringLabel& u) {
  auto g = b.generator_index(u);
  if (!g) throw std::invalid_argument("action_matrix: " + to_string(u) + " is not in the apex");
  return b.action[*g];
}

Matrix total_action(const FinitaryBirep& b) {
  Matrix f(b.rank(), b.rank());
  for (const auto& a : b.action) f = f + a;
  return f;
}

namespace {

// Permutation sorting slots by object index, stable.
std::vector<std::size_t> sorting_permutation(const std::vector<std::size_t>& slots) {
  std::vector<std::size_t> order(slots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return slots[a] < slots[c]; });
  return order;
}

ArrowImage relabel(const ArrowImage& image, const std::vector<std::size_t>& new_index) {
  std::vector<std::size_t> src, dst;
  for (auto s : image.source_slots) src.push_back(new_index[s]);
  for (auto s : image.target_slots) dst.push_back(new_index[s]);
  const auto cols = sorting_permutation(src), rows = sorting_permutation(dst);
  ArrowImage out;
  out.coefficients = Matrix(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.target_slots.push_back(dst[rows[r]]);
    for (std::size_t c = 0; c < cols.size(); ++c) out.coefficients(r, c) = image.coefficients(rows[r], cols[c]);
  }
  for (auto c : cols) out.source_slots.push_back(src[c]);
  return out;
}

// A morphism between direct sums is invertible when, object by object, the
// identity coefficients form an invertible square matrix.
bool image_is_invertible(const ArrowImage& image) {
  std::set<std::size_t> objs(image.source_slots.begin(), image.source_slots.end());
  objs.insert(image.target_slots.begin(), image.target_slots.end());
  for (auto o : objs) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < image.target_slots.size(); ++r)
      if (image.target_slots[r] == o) rows.push_back(r);
    for (std::size_t c = 0; c < image.source_slots.size(); ++c)
      if (image.source_slots[c] == o) cols.push_back(c);
    if (rows.size() != cols.size()) return false;
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = image.coefficients(rows[r], cols[c]);
    if (!is_invertible(m)) return false;
  }
  return true;
}

}  // namespace

FinitaryBirep localize(const FinitaryBirep& b, const std::vector<int>& contract) {
  std::set<int> in(contract.begin(), contract.end());
  for (int i : in) {
    if (i < 1 || i > b.n) throw std::invalid_argument("localize: component " + std::to_string(i) + " out of range");
    if (std::find(b.contracted.begin(), b.contracted.end(), i) != b.contracted.end())
      throw std::invalid_argument("localize: component " + std::to_string(i) + " is already contracted");
  }
  std::vector<std::size_t> contracted_arrows;
  for (std::size_t a = 0; a < b.arrows.size(); ++a)
    if (in.count(b.arrows[a].component)) contracted_arrows.push_back(a);

  // Stability: images of contracted arrows only involve identities and
  // contracted arrows.
  for (std::size_t g = 0; g < b.generators.size(); ++g)
    for (auto a : contracted_arrows) {
      const auto& image = b.arrow_images[g][a];
      for (std::size_t r = 0; r < image.target_slots.size(); ++r)
        for (std::size_t c = 0; c < image.source_slots.size(); ++c) {
          if (sgn(image.coefficients(r, c)) == 0) continue;
          const auto src = image.source_slots[c], dst = image.target_slots[r];
          if (src == dst) continue;
          auto via = b.arrow_between(src, dst);
          if (via && in.count(b.arrows[*via].component)) continue;
          throw std::runtime_error("localize: image of alpha_" + std::to_string(b.arrows[a].component) + " under " +
                                   to_string(b.generators[g]) + " is not in the contracted collection");
        }
    }

  FinitaryBirep out;
  out.n = b.n;
  out.k = b.k;
  out.j = b.j;
  out.generators = b.generators;
  std::vector<std::size_t> new_index(b.rank());
  std::vector<std::size_t> representative;  // old object standing for each new object
  for (std::size_t x = 0; x < b.rank(); ++x) {
    const auto& o = b.objects[x];
    if (in.count(o.component) && o.kind == BirepObject::Kind::kM) continue;
    new_index[x] = out.objects.size();
    representative.push_back(x);
    out.objects.push_back({in.count(o.component) ? BirepObject::Kind::kMerged : o.kind, o.component});
  }
  for (std::size_t x = 0; x < b.rank(); ++x) {
    const auto& o = b.objects[x];
    if (in.count(o.component) && o.kind == BirepObject::Kind::kM)
      new_index[x] = new_index[*b.object_index(BirepObject::Kind::kN, o.component)];
  }
  for (const auto& a : b.arrows)
    if (!in.count(a.component)) out.arrows.push_back({new_index[a.source], new_index[a.target], a.component});

  for (std::size_t g = 0; g < b.generators.size(); ++g) {
    const Matrix& old = b.action[g];
    Matrix merged_rows(out.rank(), b.rank());
    for (std::size_t y = 0; y < b.rank(); ++y)
      for (std::size_t x = 0; x < b.rank(); ++x) merged_rows(new_index[y], x) += old(y, x);
    Matrix act(out.rank(), out.rank());
    for (std::size_t x = 0; x < b.rank(); ++x)
      for (std::size_t y = 0; y < out.rank(); ++y) {
        if (x == representative[new_index[x]]) act(y, new_index[x]) = merged_rows(y, x);
        else if (merged_rows(y, x) != merged_rows(y, representative[new_index[x]]))
          throw std::runtime_error("localize: " + to_string(b.generators[g]) + " separates the objects of component " +
                                   std::to_string(b.objects[x].component));
      }
    out.action.push_back(act);

    std::vector<ArrowImage> images;
    for (std::size_t a = 0; a < b.arrows.size(); ++a) {
      auto image = relabel(b.arrow_images[g][a], new_index);
      if (in.count(b.arrows[a].component)) {
        if (!image_is_invertible(image))
          throw std::runtime_error("localize: image of alpha_" + std::to_string(b.arrows[a].component) + " under " +
                                   to_string(b.generators[g]) + " is not invertible after contraction");
        continue;
      }
      images.push_back(std::move(image));
    }
    out.arrow_images.push_back(std::move(images));
  }
  out.contracted = b.contracted;
  out.contracted.insert(out.contracted.end(), in.begin(), in.end());
  std::sort(out.contracted.begin(), out.contracted.end());
  return out;
}

bool is_transitive(const FinitaryBirep& b) {
  const Matrix f = total_action(b);
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (sgn(f(r, c)) <= 0) return false;
  return b.rank() > 0;
}

bool is_simple_transitive(const FinitaryBirep& b) {
  if (!is_transitive(b)) return false;
  const std::size_t objs = b.rank();
  for (const auto& seed : b.arrows) {
    // Hom spaces are at most one-dimensional, so an ideal is a set of pairs.
    std::vector<std::vector<bool>> ideal(objs, std::vector<bool>(objs, false));
    ideal[seed.source][seed.target] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      auto mark = [&](std::size_t x, std::size_t y) {
        if (!ideal[x][y] && b.hom_dimension(x, y) > 0) {
          ideal[x][y] = true;
          changed = true;
        }
      };
      for (std::size_t x = 0; x < objs; ++x)
        for (std::size_t y = 0; y < objs; ++y) {
          if (!ideal[x][y]) continue;
          // Two arrows never compose, so every composite with a basis
          // morphism on either side is nonzero.
          for (std::size_t z = 0; z < objs; ++z) {
            if (b.hom_dimension(y, z) > 0) mark(x, z);
            if (b.hom_dimension(z, x) > 0) mark(z, y);
          }
          for (std::size_t g = 0; g < b.generators.size(); ++g) {
            if (x == y) {
              for (auto o : b.slots(g, x)) mark(o, o);
              continue;
            }
            const auto& image = b.arrow_images[g][*b.arrow_between(x, y)];
            for (std::size_t r = 0; r < image.target_slots.size(); ++r)
              for (std::size_t c = 0; c < image.source_slots.size(); ++c)
                if (sgn(image.coefficients(r, c)) != 0) mark(image.source_slots[c], image.target_slots[r]);
          }
        }
    }
    bool has_identity = false;
    for (std::size_t x = 0; x < objs; ++x) has_identity = has_identity || ideal[x][x];
    if (!has_identity) return false;
  }
  return true;
}

FinitaryBirep disjoint_union(const FinitaryBirep& a, const FinitaryBirep& b) {
  if (a.generators != b.generators) throw std::invalid_argument("disjoint_union: different generators");
  FinitaryBirep out = a;
  const std::size_t shift = a.rank();
  int max_component = 0;
  for (const auto& o : a.objects) max_component = std::max(max_component, o.component);
  for (auto o : b.objects) {
    o.component += max_component;
    out.objects.push_back(o);
  }
  for (auto arrow : b.arrows) {
    arrow.source += shift;
    arrow.target += shift;
    arrow.component += max_component;
    out.arrows.push_back(arrow);
  }
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    Matrix act(out.rank(), out.rank());
    act.set_block(0, 0, a.action[g]);
    act.set_block(shift, shift, b.action[g]);
    out.action[g] = act;
    for (auto image : b.arrow_images[g]) {
      for (auto& s : image.source_slots) s += shift;
      for (auto& s : image.target_slots) s += shift;
      out.arrow_images[g].push_back(std::move(image));
    }
  }
  for (int c : b.contracted) out.contracted.push_back(c + max_component);
  return out;
}

void VerificationReport::expect(bool condition, const std::string& what) {
  ++checks;
  if (!condition) failures.push_back(what);
}

VerificationReport verify_action_identities(const FinitaryBirep& b) {
  VerificationReport report;
  const Matrix f = total_action(b);
  report.expect(f * f == Scalar(4 * b.n) * f, "[F]^2 = 4n[F]");
  Scalar trace = 0;
  for (std::size_t x = 0; x < f.rows(); ++x) trace += f(x, x);
  report.expect(trace == 4 * b.n, "trace [F] = 4n");
  bool positive = true;
  for (const auto& e : f.data()) positive = positive && sgn(e) > 0;
  report.expect(positive, "every entry of [F] is positive");
  for (std::size_t g = 0; g < b.generators.size(); ++g) {
    const auto& u = b.generators[g];
    const Matrix& a = b.action[g];
    if (u.i == u.j) report.expect(a * a == a, "[" + to_string(u) + "] is idempotent");
    else report.expect((a * a).is_zero(), "[" + to_string(u) + "] squares to zero");
  }
  return report;
}

namespace {

std::vector<std::size_t> block_objects(const FinitaryBirep& b, int component) {
  std::vector<std::size_t> out;
  for (auto kind : {BirepObject::Kind::kN, BirepObject::Kind::kM}) {
    auto x = b.object_index(kind, component);
    if (x && std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
  }
  return out;
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

bool is_contracted(const FinitaryBirep& b, int i) {
  return std::find(b.contracted.begin(), b.contracted.end(), i) != b.contracted.end();
}

Matrix expected_block(bool top, bool row_contracted, bool col_contracted) {
  if (row_contracted && col_contracted) return Matrix{{1}};
  if (row_contracted) return Matrix{{1, 1}};
  if (col_contracted) return top ? Matrix{{1}, {0}} : Matrix{{0}, {1}};
  return top ? Matrix{{1, 1}, {0, 0}} : Matrix{{0, 0}, {1, 1}};
}

}  // namespace

VerificationReport verify_block_structure(const FinitaryBirep& b) {
  VerificationReport report;
  const int n = b.n;
  std::vector<std::vector<std::size_t>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back(block_objects(b, i));
  // F_{i|j} blocks and their products.
  std::vector<std::vector<Matrix>> f(n + 1, std::vector<Matrix>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int s = 1; s <= n; ++s) f[i][s] = Matrix(b.rank(), b.rank());
  for (std::size_t g = 0; g < b.generators.size(); ++g) {
    const auto& u = b.generators[g];
    const Matrix& a = b.action[g];
    const auto& rows = blocks[u.i - 1];
    const auto& cols = blocks[u.j - 1];
    f[u.i][u.j] = f[u.i][u.j] + a;
    bool outside_zero = true;
    for (std::size_t r = 0; r < b.rank(); ++r)
      for (std::size_t c = 0; c < b.rank(); ++c) {
        const bool in_block = std::find(rows.begin(), rows.end(), r) != rows.end() &&
                              std::find(cols.begin(), cols.end(), c) != cols.end();
        if (!in_block && sgn(a(r, c)) != 0) outside_zero = false;
      }
    report.expect(outside_zero, "[" + to_string(u) + "] vanishes outside its block");
    const bool top = u.family == Family::W || u.family == Family::N;
    const Matrix expected = expected_block(top, is_contracted(b, u.i), is_contracted(b, u.j));
    report.expect(submatrix(a, rows, cols) == expected, "block A_{" + std::to_string(u.i) + "|" + std::to_string(u.j) +
                                                          "}(" + std::string(1, family_char(u.family)) + ")");
  }
  for (int i = 1; i <= n; ++i) {
    const Matrix a = submatrix(f[i][i], blocks[i - 1], blocks[i - 1]);
    report.expect(a * a == Scalar(4) * a, "A_{" + std::to_string(i) + "|" + std::to_string(i) + "}^2 = 4 A");
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          const Matrix expected = j == r ? Scalar(4) * f[i][s] : Matrix(b.rank(), b.rank());
          report.expect(f[i][j] * f[r][s] == expected, "[F_{i|j}][F_{r|s}] = 4 delta_{jr} [F_{i|s}]");
        }
  return report;
}

VerificationReport verify_adjunction_consequences(const FinitaryBirep& b) {
  VerificationReport report;
  for (int i = 1; i <= b.n; ++i)
    for (int s = 1; s <= b.n; ++s) {
      auto get = [&](Family f) { return action_matrix(b, {f, i, s, b.k}); };
      const std::string idx = std::to_string(i) + "|" + std::to_string(s);
      report.expect(get(Family::N) == get(Family::W), "[N_" + idx + "] = [W_" + idx + "]");
      report.expect(get(Family::S) == get(Family::M), "[S_" + idx + "] = [M_" + idx + "]");
    }
  for (int i = 1; i <= b.n; ++i) {
    const auto objs = block_objects(b, i);
    const std::string comp = "component " + std::to_string(i);
    if (is_contracted(b, i)) {
      report.expect(objs.size() == 1, comp + " is of type A1");
      report.expect(objs.size() == 1 && b.hom_dimension(objs[0], objs[0]) == 1, comp + " has a one-dimensional End");
    } else {
      report.expect(objs.size() == 2, comp + " is of type A2");
      if (objs.size() != 2) continue;
      const auto nn = objs[0], m = objs[1];
      report.expect(b.hom_dimension(m, nn) == 1, comp + ": Hom(M, N) is one-dimensional");
      report.expect(b.hom_dimension(nn, m) == 0, comp + ": Hom(N, M) is zero");
      // alpha_i has no inverse: nothing maps back from N to M.
      report.expect(b.arrow_between(m, nn).has_value() && b.hom_dimension(nn, m) == 0,
                    comp + ": alpha is not invertible");
      // The idempotents W_{i|i} and N_{i|i} send alpha_i to an isomorphism.
      const auto a = *b.arrow_between(m, nn);
      for (auto f : {Family::W, Family::N}) {
        const auto g = *b.generator_index({f, i, i, b.k});
        report.expect(image_is_invertible(b.arrow_images[g][a]),
                      comp + ": image of alpha under " + to_string(b.generators[g]) + " is invertible");
      }
    }
  }
  return report;
}

std::vector<int> fingerprint(const FinitaryBirep& b) {
  std::vector<int> out;
  for (int i = 1; i <= b.n; ++i) {
    bool same = true;
    for (int s = 1; s <= b.n; ++s)
      same = same && action_matrix(b, {Family::M, i, s, b.k}) == action_matrix(b, {Family::N, i, s, b.k});
    if (same) out.push_back(i);
  }
  return out;
}

namespace {

std::size_t binomial(int n, int m) {
  std::size_t r = 1;
  for (int t = 1; t <= m; ++t) r = r * static_cast<std::size_t>(n - m + t) / static_cast<std::size_t>(t);
  return r;
}

}  // namespace

bool ClassificationReport::matches_expected() const {
  if (entries.size() != (std::size_t{1} << n) || !fingerprints_distinct) return false;
  for (const auto& e : entries)
    if (!e.simple_transitive || e.rank < static_cast<std::size_t>(n) || e.rank > static_cast<std::size_t>(2 * n))
      return false;
  for (int m = 0; m <= n; ++m) {
    auto it = counts.find(static_cast<std::size_t>(n + m));
    if (it == counts.end() || it->second != binomial(n, m)) return false;
  }
  return true;
}

ClassificationReport classify(int n, int k, const SearchOptions& options) {
  return classify(cell_birep(n, k, 1, options));
}

ClassificationReport classify(const FinitaryBirep& cell) {
  ClassificationReport report;
  report.n = cell.n;
  report.k = cell.k;
  std::set<std::vector<int>> seen;
  for (unsigned mask = 0; mask < (1u << cell.n); ++mask) {
    ClassificationEntry e;
    for (int i = 1; i <= cell.n; ++i)
      if (mask & (1u << (i - 1))) e.contracted.push_back(i);
    const auto local = localize(cell, e.contracted);
    e.rank = local.rank();
    e.simple_transitive = is_simple_transitive(local);
    e.fingerprint = fingerprint(local);
    if (!seen.insert(e.fingerprint).second) report.fingerprints_distinct = false;
    ++report.counts[e.rank];
    report.entries.push_back(std::move(e));
  }
  return report;
}

nlohmann::json to_json(const FinitaryBirep& b, bool with_morphisms) {
  nlohmann::json objects = nlohmann::json::array();
  for (const auto& o : b.objects) objects.push_back(to_string(o));
  nlohmann::json cartan = nlohmann::json::array();
  for (std::size_t x = 0; x < b.rank(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t y = 0; y < b.rank(); ++y) row.push_back(b.hom_dimension(x, y));
    cartan.push_back(row);
  }
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : b.arrows)
    arrows.push_back({{"component", a.component}, {"source", to_string(b.objects[a.source])},
                      {"target", to_string(b.objects[a.target])}});
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t g = 0; g < b.generators.size(); ++g) {
    nlohmann::json entry = {{"label", to_string(b.generators[g])}, {"action", matrix_json(b.action[g])}};
    if (with_morphisms) {
      nlohmann::json images = nlohmann::json::array();
      for (std::size_t a = 0; a < b.arrows.size(); ++a) {
        const auto& im = b.arrow_images[g][a];
        nlohmann::json src = nlohmann::json::array(), dst = nlohmann::json::array();
        for (auto s : im.source_slots) src.push_back(to_string(b.objects[s]));
        for (auto s : im.target_slots) dst.push_back(to_string(b.objects[s]));
        images.push_back({{"component", b.arrows[a].component},
                          {"source_slots", src},
                          {"target_slots", dst},
                          {"coefficients", matrix_json(im.coefficients)}});
      }
      entry["arrow_images"] = images;
    }
    gens.push_back(entry);
  }
  return {{"n", b.n},
          {"k", b.k},
          {"j", b.j},
          {"rank", b.rank()},
          {"objects", objects},
          {"contracted", b.contracted},
          {"cartan", cartan},
          {"arrows", arrows},
          {"total_action", matrix_json(total_action(b))},
          {"generators", gens}};
}

nlohmann::json to_json(const ClassificationReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"I", e.contracted},
                       {"rank", e.rank},
                       {"simple_transitive", e.simple_transitive},
                       {"fingerprint", e.fingerprint}});
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [rank, count] : report.counts) counts[std::to_string(rank)] = count;
  return {{"n", report.n},
          {"k", report.k},
          {"entries", entries},
          {"counts", counts},
          {"fingerprints_distinct", report.fingerprints_distinct},
          {"matches_expected", report.matches_expected()}};
}

}  // namespace nakayama

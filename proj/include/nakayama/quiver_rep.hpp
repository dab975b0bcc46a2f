// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_QUIVER_REP_HPP
#define NAKAYAMA_QUIVER_REP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nakayama/exact_linalg.hpp"

namespace nakayama {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string name;
};

/// One term of a relation: coefficient times a path. Arrows are listed in
/// the order they are traversed.
struct PathTerm {
  Scalar coefficient;
  std::vector<std::size_t> arrows;
};

/// A relation says the sum of its terms vanishes.
struct Relation {
  std::vector<PathTerm> terms;
};

class Quiver {
 public:
  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows, std::vector<Relation> relations);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertex_names_[v]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A finite-dimensional representation: a vector space per vertex and a
/// matrix per arrow, of shape dim(target) x dim(source).
class Representation {
 public:
  Representation() = default;
  Representation(QuiverPtr quiver, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  static Representation zero(QuiverPtr quiver);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }

  /// Matrix of a path; the identity of the start vertex for an empty path.
  Matrix path_matrix(std::size_t start, const std::vector<std::size_t>& arrows) const;
  bool satisfies_relations() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  QuiverPtr quiver_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

/// A homomorphism of representations, one component per vertex.
struct Morphism {
  std::vector<Matrix> components;

  friend bool operator==(const Morphism& a, const Morphism& b) { return a.components == b.components; }
};

Morphism identity_morphism(const Representation& x);
Morphism zero_morphism(const Representation& x, const Representation& y);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Scalar& s, const Morphism& f);
bool is_zero(const Morphism& f);
bool is_morphism(const Representation& x, const Representation& y, const Morphism& f);
/// Every component is square and invertible.
bool is_isomorphism(const Morphism& f);
std::optional<Morphism> inverse(const Morphism& f);

/// Flattened coordinates (vertex by vertex, row-major) of a morphism.
Vector flatten(const Morphism& f);

/// Basis of Hom(x, y), obtained as the kernel of the intertwining system
/// F_w X_a = Y_a F_v for every arrow a: v -> w.
std::vector<Morphism> hom_basis(const Representation& x, const Representation& y);

/// Coordinates of f in the given basis, or nothing when f is outside the span.
std::optional<Vector> coordinates(const std::vector<Morphism>& basis, const Morphism& f);

struct DirectSum {
  Representation sum;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(QuiverPtr quiver, const std::vector<Representation>& parts);

/// The image of an idempotent endomorphism, with its inclusion and the
/// projection onto it (projection after inclusion is the identity).
struct Retract {
  Representation part;
  Morphism inclusion;
  Morphism projection;
};

Retract image_of_idempotent(const Representation& x, const Morphism& e);

inline constexpr std::uint64_t kDefaultSeed = 0x6e616b61u;

struct SearchOptions {
  std::uint64_t seed = kDefaultSeed;
  int random_attempts = 8;
};

/// How a split pair was found, or why none exists.
enum class SplitEvidence {
  kBasisPair,
  kRandomCombination,
  kGenericCombination,
  kIdealCertificate,
};

/// section: x -> t and retraction: t -> x with retraction after section the
/// identity of x.
struct SplitPair {
  Morphism section;
  Morphism retraction;
  SplitEvidence evidence = SplitEvidence::kBasisPair;
};

/// End(x) is local with residue field Q: the trace form on End(x) has rank 1.
/// Its radical is then the Jacobson radical, and an endomorphism is invertible
/// exactly when its trace is nonzero.
bool has_local_endomorphism_ring(const Representation& x);

/// Searches for a split pair exhibiting x as a direct summand of t.
/// Order: products of hom basis pairs, seeded random combinations, then an
/// exact certificate. When End(x) is local the basis pairs already decide. The certificate is the ideal test (identity of x in the
/// span of all composites through t), followed by a symbolic determinant test
/// of the generic composite when x is decomposable.
std::optional<SplitPair> split_pair_search(const Representation& x, const Representation& t,
                                           const SearchOptions& options = {});

/// Isomorphism test: matching dimension vectors, then an invertible element
/// of Hom(x, y) among basis elements, seeded random combinations, and finally
/// a symbolic determinant of the generic combination.
bool is_isomorphic(const Representation& x, const Representation& y, const SearchOptions& options = {});

/// A summand found by peeling, recorded against the original module.
struct PeeledSummand {
  std::size_t candidate = 0;
  SplitPair pair;
};

struct PeelResult {
  std::vector<PeeledSummand> summands;
  Representation residual;
  Morphism residual_inclusion;
  Morphism residual_projection;
};

/// Repeatedly splits off candidates, in the given order, until none is a
/// summand of what remains. Candidates should be indecomposable.
PeelResult peel(const Representation& t, std::span<const Representation> candidates,
                const SearchOptions& options = {});

/// Checks that the recorded split pairs and the residual give a direct sum
/// decomposition of t: retraction_a section_b = delta_ab and the sections
/// times retractions sum to the identity.
bool certifies_decomposition(const Representation& t, std::span<const Representation> candidates,
                             const PeelResult& result);

/// Determinant of a matrix whose entries are linear forms in free variables,
/// tested for being the zero polynomial. `forms[k]` is the coefficient
/// matrix of variable k.
bool generic_determinant_nonzero(const std::vector<Matrix>& forms);

}  // namespace nakayama

#endif  // NAKAYAMA_QUIVER_REP_HPP

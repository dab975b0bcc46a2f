// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_BIREP_HPP
#define NAKAYAMA_BIREP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nakayama/decompose.hpp"

namespace nakayama {

/// An object of a birepresentation: N_i, M_i, or the merged object O_i of a
/// contracted component.
struct BirepObject {
  enum class Kind { kN, kM, kMerged };
  Kind kind = Kind::kN;
  int component = 1;
};

std::string to_string(const BirepObject& o);

/// The arrow alpha_i: M_i -> N_i of an uncontracted component.
struct BirepArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  int component = 1;
};

/// The image of an arrow under a generator, as a morphism between direct sums
/// of objects. Every hom space has dimension at most one, so entry (r, c) is
/// the coefficient of the basis morphism from column slot c to row slot r.
struct ArrowImage {
  std::vector<std::size_t> source_slots;
  std::vector<std::size_t> target_slots;
  Matrix coefficients;
};

/// A finitary birepresentation whose underlying category is a disjoint union
/// of A1 and A2 quivers, one component per index i. Hom(X, X) is spanned by
/// the identity, Hom(M_i, N_i) by alpha_i, and every other hom space is zero.
struct FinitaryBirep {
  int n = 1;
  int k = 1;
  int j = 1;
  std::vector<BirepObject> objects;
  std::vector<BirepArrow> arrows;
  std::vector<StringLabel> generators;
  /// action[g](y, x): multiplicity of object y in generator g applied to x.
  std::vector<Matrix> action;
  /// arrow_images[g][a]: generator g applied to arrow a.
  std::vector<std::vector<ArrowImage>> arrow_images;
  std::vector<int> contracted;

  std::size_t rank() const { return objects.size(); }
  std::optional<std::size_t> object_index(BirepObject::Kind kind, int component) const;
  std::optional<std::size_t> generator_index(const StringLabel& label) const;
  std::optional<std::size_t> arrow_between(std::size_t source, std::size_t target) const;
  std::size_t hom_dimension(std::size_t source, std::size_t target) const;
  /// Slots of generator g applied to object x: objects in index order, each
  /// repeated by its multiplicity.
  std::vector<std::size_t> slots(std::size_t g, std::size_t x) const;
};

/// Dimensions of hom spaces in the ambient category and after passing to the
/// quotient, object by object.
struct CartanData {
  std::vector<std::vector<std::size_t>> ambient;
  std::vector<std::vector<std::size_t>> quotient;
};

/// The cell birepresentation of the left cell {N_{.|j}, M_{.|j}} of J_k.
/// Throws std::runtime_error when the quotient hom spaces are not of type A2^n.
FinitaryBirep cell_birep(int n, int k, int j, const SearchOptions& options = {}, CartanData* cartan = nullptr);

/// Action matrix of a generator; throws for labels outside the generators.
Matrix action_matrix(const FinitaryBirep& b, const StringLabel& u);
/// Sum of the action matrices of all generators.
Matrix total_action(const FinitaryBirep& b);

/// Contracts alpha_i for every i in `contract`. Throws std::runtime_error when
/// the collection is not stable under the action.
FinitaryBirep localize(const FinitaryBirep& b, const std::vector<int>& contract);

bool is_transitive(const FinitaryBirep& b);
bool is_simple_transitive(const FinitaryBirep& b);

/// Disjoint union of two birepresentations with the same generators.
FinitaryBirep disjoint_union(const FinitaryBirep& a, const FinitaryBirep& b);

struct VerificationReport {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  bool ok() const { return failures.empty(); }
  void expect(bool condition, const std::string& what);
};

/// [F]^2 = 4n[F], trace 4n, positive entries.
VerificationReport verify_action_identities(const FinitaryBirep& b);
/// Diagonal and off-diagonal block forms of the action matrices.
VerificationReport verify_block_structure(const FinitaryBirep& b);
/// [N_{i|j}] = [W_{i|j}], [S_{i|j}] = [M_{i|j}], Cartan type per component,
/// and alpha_i invertible exactly for contracted i.
VerificationReport verify_adjunction_consequences(const FinitaryBirep& b);

/// {i : [M_{i|s}] = [N_{i|s}] for every s}.
std::vector<int> fingerprint(const FinitaryBirep& b);

struct ClassificationEntry {
  std::vector<int> contracted;
  std::size_t rank = 0;
  bool simple_transitive = false;
  std::vector<int> fingerprint;
};

struct ClassificationReport {
  int n = 1;
  int k = 1;
  std::vector<ClassificationEntry> entries;
  std::map<std::size_t, std::size_t> counts;
  bool fingerprints_distinct = true;
  /// counts(n + m) = binomial(n, m), every entry simple transitive, ranks in [n, 2n].
  bool matches_expected() const;
};

ClassificationReport classify(int n, int k, const SearchOptions& options = {});
ClassificationReport classify(const FinitaryBirep& cell);

nlohmann::json to_json(const FinitaryBirep& b, bool with_morphisms = true);
nlohmann::json to_json(const ClassificationReport& report);

}  // namespace nakayama

#endif  // NAKAYAMA_BIREP_HPP

#ifndef TLC_PAIRS_HPP
#define TLC_PAIRS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlc/syntactic.hpp"

namespace tlc {

/// The parameter class of the classifier. The three built-in classes come
/// with canonical morphisms whose eta-pairs are exactly the class pairs:
///
///   ST: {empty, A*}                  -> the one-element monoid
///   DD: {empty, {eps}, A+, A*}       -> {1, 0} with every letter sent to 0
///   AT: boolean combinations of A*aA* -> subsets of A under union, a -> {a}
///
/// A custom class is *defined* as the set of languages recognized by a
/// user-supplied surjective morphism; its pairs are the eta-pairs of that
/// morphism by construction.
class ClassSpec {
public:
  enum class Kind { ST, DD, AT, Custom };

  static ClassSpec st() { return ClassSpec(Kind::ST); }
  static ClassSpec dd() { return ClassSpec(Kind::DD); }
  static ClassSpec at() { return ClassSpec(Kind::AT); }

  /// Restricts the morphism to its image (so it is surjective) and stores
  /// it. The codomain must already have passed monoid validation.
  static ClassSpec custom(Morphism eta);

  Kind kind() const { return kind_; }
  std::string name() const;

  /// The concrete morphism used to compute pairs over `alphabet`. For the
  /// built-in kinds this is the canonical construction; for Custom the
  /// stored morphism, whose alphabet must agree (as a set) with `alphabet`.
  Morphism morphism_for(const std::vector<char>& alphabet) const;

private:
  explicit ClassSpec(Kind k) : kind_(k) {}

  Kind kind_;
  std::optional<Morphism> custom_;
};

/// Canonical class morphism for the built-in kinds (ST, DD, AT).
Morphism canonical_morphism(ClassSpec::Kind kind, const std::vector<char>& alphabet);

/// Result of the surjectivity check: either the input was already
/// surjective, or `morphism` is the restriction to its image.
struct SurjectivityResult {
  bool was_surjective;
  Morphism morphism;
};

SurjectivityResult check_surjective(const Morphism& m);

/// The pair relation over M x M, together with the underlying reachable
/// relation R over M x N that produced it: R is the submonoid of the product
/// generated by the letter image pairs, and (s, t) is a pair iff s and t
/// share a reachable N-component.
class PairSet {
public:
  PairSet(int m_size, MonoidPtr eta_codomain, std::vector<bool> relation, std::string provenance);

  int m_size() const { return m_size_; }
  const MonoidPtr& eta_codomain() const { return eta_codomain_; }
  const std::string& provenance() const { return provenance_; }

  bool contains(int s, int t) const {
    return pair_mat_[static_cast<std::size_t>(s) * m_size_ + t];
  }

  /// Reachability of (s, r) in the product saturation.
  bool related(int s, int r) const {
    return relation_[static_cast<std::size_t>(s) * eta_codomain_->size() + r];
  }

  /// All pairs in lexicographic order.
  std::vector<std::pair<int, int>> pairs_sorted() const;

private:
  int m_size_;
  MonoidPtr eta_codomain_;
  std::vector<bool> relation_;  // m x n
  std::vector<bool> pair_mat_;  // m x m
  std::string provenance_;
};

/// Saturates {(image of w under alpha, image of w under eta) : w word} by a
/// worklist over the product monoid and derives the pair relation. Both
/// morphisms must share the alphabet.
PairSet eta_pairs(const Morphism& alpha, const Morphism& eta, std::string provenance = "eta");

/// Pairs of `alpha` for the class: eta_pairs against the class morphism.
PairSet c_pairs(const Morphism& alpha, const ClassSpec& spec);

}  // namespace tlc

#endif  // TLC_PAIRS_HPP

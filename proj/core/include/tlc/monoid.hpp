#ifndef TLC_MONOID_HPP
#define TLC_MONOID_HPP

#include <memory>
#include <optional>
#include <vector>

#include "tlc/errors.hpp"

namespace tlc {

class FiniteMonoid;
using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

/// A finite monoid given by its full multiplication table. Elements are the
/// dense indices 0..size-1; the identity is stored explicitly and is not
/// required to be index 0 (transition monoids are produced by saturation in
/// whatever order the search visits them).
///
/// The constructor checks the identity law and full associativity, so a
/// value of this type is always a genuine monoid. Instances are immutable.
class FiniteMonoid {
public:
  /// `table` is a flattened size*size matrix in row-major order; row = left
  /// operand. Throws IdentityError / AssociativityError on malformed input.
  FiniteMonoid(int size, std::vector<int> table, int identity);

  /// Wraps a table that is associative by construction (function
  /// composition, product monoids, re-indexed submonoids) without the cubic
  /// validation pass. Range and identity checks still run.
  static MonoidPtr trusted(int size, std::vector<int> table, int identity);

  int size() const { return size_; }
  int identity() const { return identity_; }

  int mul(int s, int t) const { return table_[static_cast<std::size_t>(s) * size_ + t]; }

  int mul(int s, int t, int u) const { return mul(mul(s, t), u); }

  bool is_idempotent(int s) const { return mul(s, s) == s; }

  /// The unique idempotent power s^omega of s. Always exists in a finite
  /// monoid; precomputed for every element at construction.
  int omega(int s) const { return omegas_[s]; }

  /// s^(omega+1) = s^omega * s.
  int omega_plus_one(int s) const { return mul(omega(s), s); }

  /// All idempotents, ascending.
  std::vector<int> idempotents() const;

private:
  struct trusted_t {};
  FiniteMonoid(trusted_t, int size, std::vector<int> table, int identity);

  int size_;
  int identity_;
  std::vector<int> table_;
  std::vector<int> omegas_;
};

/// A multiplicatively closed subset of a monoid together with a local
/// identity. The local identity must be neutral on the subset but need not
/// be the identity of the parent (orbits and corner monoids e*S*e have
/// identity e). Elements are kept sorted.
class SubMonoid {
public:
  /// Validates closure and neutrality of `local_identity`; throws
  /// ClosureError when either fails. `elements` need not be sorted.
  static SubMonoid checked(MonoidPtr parent, std::vector<int> elements, int local_identity);

  /// Least multiplicatively closed superset of `generators` and `unit`.
  static SubMonoid generated(MonoidPtr parent, const std::vector<int>& generators, int unit);

  const FiniteMonoid& parent() const { return *parent_; }
  MonoidPtr parent_ptr() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int local_identity() const { return local_identity_; }
  bool contains(int s) const;

private:
  SubMonoid(MonoidPtr parent, std::vector<int> elements, int local_identity);

  MonoidPtr parent_;
  std::vector<int> elements_;
  int local_identity_;
};

/// Green's preorders as dense boolean matrices: leq_j(s,t) iff s is in MtM,
/// leq_l(s,t) iff s is in Mt, leq_r(s,t) iff s is in tM.
class GreenData {
public:
  explicit GreenData(const FiniteMonoid& m);

  int size() const { return size_; }

  bool leq_j(int s, int t) const { return jmat_[idx(s, t)]; }
  bool leq_l(int s, int t) const { return lmat_[idx(s, t)]; }
  bool leq_r(int s, int t) const { return rmat_[idx(s, t)]; }

  bool equiv_j(int s, int t) const { return leq_j(s, t) && leq_j(t, s); }
  bool equiv_l(int s, int t) const { return leq_l(s, t) && leq_l(t, s); }
  bool equiv_r(int s, int t) const { return leq_r(s, t) && leq_r(t, s); }

  bool strictly_below_j(int s, int t) const { return leq_j(s, t) && !leq_j(t, s); }

private:
  std::size_t idx(int s, int t) const { return static_cast<std::size_t>(s) * size_ + t; }

  int size_;
  std::vector<bool> jmat_, lmat_, rmat_;
};

GreenData green(const FiniteMonoid& m);

/// Length of the longest strict J-chain above r: the maximal n such that
/// r <J r1 <J ... <J rn. Zero exactly when r is J-equivalent to the identity.
int j_depth(const GreenData& g, int r);

/// All depths at once (memoized longest-path over the J-order).
std::vector<int> j_depths(const GreenData& g);

/// A failed equation instance. `lhs` and `rhs` are the element values of the
/// two sides, re-evaluable from (s, t) through the parent table.
struct EquationWitness {
  int s;
  int t;
  int lhs;
  int rhs;
};

/// Checks (st)^w = (st)^w t (st)^w for all s,t in the subset, products and
/// omega powers taken in the parent table. Returns the first violation in
/// lexicographic (s,t) element order, or nullopt on success.
std::optional<EquationWitness> check_da(const SubMonoid& sub);

/// t(st)^w = (st)^w for all s,t (equationally: the L relation is equality).
std::optional<EquationWitness> check_l_trivial(const SubMonoid& sub);

/// (st)^w s = (st)^w for all s,t (the R relation is equality).
std::optional<EquationWitness> check_r_trivial(const SubMonoid& sub);

/// Both of the above; equivalent to the J relation being equality.
std::optional<EquationWitness> check_j_trivial(const SubMonoid& sub);

/// s^(w+1) = s^w for all s; witness has s = t.
std::optional<EquationWitness> check_aperiodic(const SubMonoid& sub);

}  // namespace tlc

#endif  // TLC_MONOID_HPP

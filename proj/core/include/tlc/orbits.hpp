#ifndef TLC_ORBITS_HPP
#define TLC_ORBITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tlc/pairs.hpp"

namespace tlc {

/// What a verdict is about. The first five are memberships decided by orbit
/// conditions; RPolBPol/LPolBPol are one-directional sufficient checks; the
/// last three are the class-specific direct constructions used as
/// cross-validation oracles for ST, DD and AT.
enum class Property {
  TL,
  TL_F,
  TL_P,
  TL_FP,
  UPolBPol,
  RPolBPol,
  LPolBPol,
  DaGlobal,   // whole syntactic monoid in DA
  LocalDa,    // eSe in DA for the idempotents of the syntactic semigroup
  MeDa,       // e N_e e in DA, N_e generated by everything J-above e
};

std::string property_name(Property p);

/// A concrete equation violation: elements (e, s, t) and the values of the
/// two sides. Re-evaluating the equation at (e, s, t) reproduces lhs != rhs.
struct OrbitWitness {
  int e;
  int s;
  int t;
  int lhs;
  int rhs;
};

struct Verdict {
  Property property;
  bool holds;            // membership: in/out; sufficient check: holds/fails
  bool sufficient_only;  // true for the RPol/LPol conditions
  std::optional<OrbitWitness> witness;
};

/// The orbit of an idempotent e: all elements e*t*e where (e, t) is a pair.
/// Always a monoid inside the parent with identity e; validated on
/// construction.
struct Orbit {
  int base;
  SubMonoid members;
};

/// Throws NotIdempotentError when e is not idempotent and ClosureError when
/// the member set fails closure or neutrality (which signals an
/// inconsistent custom class morphism).
Orbit orbit(const Morphism& alpha, const PairSet& pairs, int e);

/// Everything the orbit-level verdicts need, computed once: the class
/// morphism, the pair relation and the orbits of all idempotents
/// (ascending).
struct OrbitAnalysis {
  RecognizedLanguage lang;
  ClassSpec spec;
  Morphism eta;
  PairSet pairs;
  std::vector<Orbit> orbits;
};

/// `lang` must come from syntactic_morphism: the orbit conditions
/// characterize membership through the syntactic morphism specifically.
OrbitAnalysis analyze(const RecognizedLanguage& lang, const ClassSpec& spec);

/// Membership in TL(C): every orbit satisfies (st)^w = (st)^w t (st)^w.
Verdict verdict_tl(const OrbitAnalysis& a);

/// Pure-future fragment: every orbit is L-trivial.
Verdict verdict_tl_f(const OrbitAnalysis& a);

/// Pure-past fragment: every orbit is R-trivial.
Verdict verdict_tl_p(const OrbitAnalysis& a);

/// Intersection of the fragments: every orbit is J-trivial.
Verdict verdict_tl_fp(const OrbitAnalysis& a);

/// Membership in UPol(BPol(C)):
/// (esete)^(w+1) = (esete)^w ete (esete)^w for every pair (e, s) with e
/// idempotent and every t.
Verdict check_upol_bpol(const OrbitAnalysis& a);

/// Sufficient condition for RPol(BPol(C)):
/// (esete)^(w+1) = ete (esete)^w over pairs (e, s), t free.
Verdict check_rpol_bpol(const OrbitAnalysis& a);

/// Sufficient condition for LPol(BPol(C)):
/// (esete)^(w+1) = (esete)^w ese over pairs (e, t), s free.
Verdict check_lpol_bpol(const OrbitAnalysis& a);

/// Direct ST oracle: the whole syntactic monoid is in DA.
Verdict specialized_st(const RecognizedLanguage& lang);

/// Direct DD oracle: eSe is in DA for every idempotent e of the syntactic
/// semigroup S.
Verdict specialized_dd(const RecognizedLanguage& lang);

/// Direct AT oracle: the syntactic monoid is in MeDA.
Verdict specialized_at(const RecognizedLanguage& lang);

/// Checks that each orbit is contained in the image of a single eta-class
/// of an idempotent of N: for every orbit there must be some idempotent f
/// of N with every member related to f. Returns the first failing base
/// idempotent, or nullopt.
std::optional<int> orbit_containment_check(const OrbitAnalysis& a);

}  // namespace tlc

#endif  // TLC_ORBITS_HPP

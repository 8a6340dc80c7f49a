#include "tlc/orbits.hpp"

#include <algorithm>

#include "tlc/errors.hpp"

namespace tlc {

std::string property_name(Property p) {
  switch (p) {
    case Property::TL:
      return "TL";
    case Property::TL_F:
      return "TL_F";
    case Property::TL_P:
      return "TL_P";
    case Property::TL_FP:
      return "TL_FP";
    case Property::UPolBPol:
      return "UPolBPol";
    case Property::RPolBPol:
      return "RPolBPol";
    case Property::LPolBPol:
      return "LPolBPol";
    case Property::DaGlobal:
      return "DA-global";
    case Property::LocalDa:
      return "eSe-DA";
    case Property::MeDa:
      return "MeDA";
  }
  return "?";
}

Orbit orbit(const Morphism& alpha, const PairSet& pairs, int e) {
  const FiniteMonoid& m = *alpha.codomain;
  if (!m.is_idempotent(e)) {
    throw NotIdempotentError(e);
  }
  std::vector<int> members;
  for (int t = 0; t < m.size(); ++t) {
    if (pairs.contains(e, t)) {
      members.push_back(m.mul(m.mul(e, t), e));
    }
  }
  return Orbit{e, SubMonoid::checked(alpha.codomain, std::move(members), e)};
}

namespace {

// The orbit conditions characterize membership through the syntactic
// morphism specifically; other recognizers would give wrong answers, so
// they are rejected. The congruence check is skipped on very large
// codomains, which only arise from the transition-monoid pipeline.
void require_syntactic(const RecognizedLanguage& lang) {
  const Morphism& alpha = lang.morphism;
  if (!alpha.is_surjective()) {
    throw InputError("classification requires the syntactic morphism, which is surjective");
  }
  if (alpha.codomain->size() <= 2048 && !is_syntactic(lang)) {
    throw InputError(
        "classification requires the syntactic morphism; this recognizer identifies fewer "
        "contexts than the language does");
  }
}

}  // namespace

OrbitAnalysis analyze(const RecognizedLanguage& lang, const ClassSpec& spec) {
  const Morphism& alpha = lang.morphism;
  require_syntactic(lang);
  Morphism eta = spec.morphism_for(alpha.alphabet);
  PairSet pairs = eta_pairs(alpha, eta, spec.name());
  std::vector<Orbit> orbits;
  for (int e : alpha.codomain->idempotents()) {
    orbits.push_back(orbit(alpha, pairs, e));
  }
  return OrbitAnalysis{lang, spec, std::move(eta), std::move(pairs), std::move(orbits)};
}

namespace {

template <typename Check>
Verdict orbit_verdict(Property p, const OrbitAnalysis& a, Check&& check) {
  for (const Orbit& o : a.orbits) {
    if (auto w = check(o.members)) {
      return {p, false, false, OrbitWitness{o.base, w->s, w->t, w->lhs, w->rhs}};
    }
  }
  return {p, true, false, std::nullopt};
}

}  // namespace

Verdict verdict_tl(const OrbitAnalysis& a) {
  return orbit_verdict(Property::TL, a, [](const SubMonoid& s) { return check_da(s); });
}

Verdict verdict_tl_f(const OrbitAnalysis& a) {
  return orbit_verdict(Property::TL_F, a, [](const SubMonoid& s) { return check_l_trivial(s); });
}

Verdict verdict_tl_p(const OrbitAnalysis& a) {
  return orbit_verdict(Property::TL_P, a, [](const SubMonoid& s) { return check_r_trivial(s); });
}

Verdict verdict_tl_fp(const OrbitAnalysis& a) {
  return orbit_verdict(Property::TL_FP, a, [](const SubMonoid& s) { return check_j_trivial(s); });
}

namespace {

// (esete)^(w+1) against the three right-hand sides, scanning idempotents
// ascending, then (s, t) lexicographically. `s_paired` / `t_paired` select
// which variable must form a pair with e.
template <typename Rhs>
Verdict equation_verdict(Property p, bool sufficient, const OrbitAnalysis& a, bool s_paired,
                         bool t_paired, Rhs&& rhs_of) {
  const FiniteMonoid& m = *a.lang.morphism.codomain;
  for (int e : m.idempotents()) {
    for (int s = 0; s < m.size(); ++s) {
      if (s_paired && !a.pairs.contains(e, s)) {
        continue;
      }
      const int ese = m.mul(m.mul(e, s), e);
      for (int t = 0; t < m.size(); ++t) {
        if (t_paired && !a.pairs.contains(e, t)) {
          continue;
        }
        const int ete = m.mul(m.mul(e, t), e);
        const int x = m.mul(ese, m.mul(t, e));  // esete
        const int xw = m.omega(x);
        const int lhs = m.mul(xw, x);
        const int rhs = rhs_of(m, xw, ese, ete);
        if (lhs != rhs) {
          return {p, false, sufficient, OrbitWitness{e, s, t, lhs, rhs}};
        }
      }
    }
  }
  return {p, true, sufficient, std::nullopt};
}

}  // namespace

Verdict check_upol_bpol(const OrbitAnalysis& a) {
  return equation_verdict(Property::UPolBPol, false, a, true, false,
                          [](const FiniteMonoid& m, int xw, int, int ete) {
                            return m.mul(m.mul(xw, ete), xw);
                          });
}

Verdict check_rpol_bpol(const OrbitAnalysis& a) {
  return equation_verdict(Property::RPolBPol, true, a, true, false,
                          [](const FiniteMonoid& m, int xw, int, int ete) {
                            return m.mul(ete, xw);
                          });
}

Verdict check_lpol_bpol(const OrbitAnalysis& a) {
  return equation_verdict(Property::LPolBPol, true, a, false, true,
                          [](const FiniteMonoid& m, int xw, int ese, int) {
                            return m.mul(xw, ese);
                          });
}

namespace {

Verdict corner_da_verdict(Property p, MonoidPtr mp, const std::vector<int>& carrier,
                          const std::vector<int>& idempotents) {
  const FiniteMonoid& m = *mp;
  for (int e : idempotents) {
    std::vector<int> corner;
    corner.reserve(carrier.size());
    for (int s : carrier) {
      corner.push_back(m.mul(m.mul(e, s), e));
    }
    const SubMonoid sub = SubMonoid::checked(mp, std::move(corner), e);
    if (auto w = check_da(sub)) {
      return {p, false, false, OrbitWitness{e, w->s, w->t, w->lhs, w->rhs}};
    }
  }
  return {p, true, false, std::nullopt};
}

}  // namespace

Verdict specialized_st(const RecognizedLanguage& lang) {
  require_syntactic(lang);
  const MonoidPtr mp = lang.morphism.codomain;
  std::vector<int> all(mp->size());
  for (int i = 0; i < mp->size(); ++i) {
    all[i] = i;
  }
  const SubMonoid whole = SubMonoid::checked(mp, std::move(all), mp->identity());
  if (auto w = check_da(whole)) {
    return {Property::DaGlobal, false, false,
            OrbitWitness{mp->identity(), w->s, w->t, w->lhs, w->rhs}};
  }
  return {Property::DaGlobal, true, false, std::nullopt};
}

Verdict specialized_dd(const RecognizedLanguage& lang) {
  require_syntactic(lang);
  const MonoidPtr mp = lang.morphism.codomain;
  const std::vector<int> semigroup = syntactic_semigroup(lang);
  std::vector<int> idems;
  for (int e : semigroup) {
    if (mp->is_idempotent(e)) {
      idems.push_back(e);
    }
  }
  return corner_da_verdict(Property::LocalDa, mp, semigroup, idems);
}

Verdict specialized_at(const RecognizedLanguage& lang) {
  require_syntactic(lang);
  const MonoidPtr mp = lang.morphism.codomain;
  const GreenData g = green(*mp);
  for (int e : mp->idempotents()) {
    std::vector<int> above;
    for (int s = 0; s < mp->size(); ++s) {
      if (g.leq_j(e, s)) {
        above.push_back(s);
      }
    }
    const SubMonoid ne = SubMonoid::generated(mp, above, mp->identity());
    std::vector<int> corner;
    corner.reserve(ne.elements().size());
    for (int s : ne.elements()) {
      corner.push_back(mp->mul(mp->mul(e, s), e));
    }
    const SubMonoid sub = SubMonoid::checked(mp, std::move(corner), e);
    if (auto w = check_da(sub)) {
      return {Property::MeDa, false, false, OrbitWitness{e, w->s, w->t, w->lhs, w->rhs}};
    }
  }
  return {Property::MeDa, true, false, std::nullopt};
}

std::optional<int> orbit_containment_check(const OrbitAnalysis& a) {
  const std::vector<int> eta_idems = a.pairs.eta_codomain()->idempotents();
  for (const Orbit& o : a.orbits) {
    bool covered = false;
    for (int f : eta_idems) {
      bool all = true;
      for (int x : o.members.elements()) {
        if (!a.pairs.related(x, f)) {
          all = false;
          break;
        }
      }
      if (all) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return o.base;
    }
  }
  return std::nullopt;
}

}  // namespace tlc

#ifndef TLC_CHECKS_HPP
#define TLC_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tlc/corpus.hpp"
#include "tlc/formula.hpp"
#include "tlc/orbits.hpp"

namespace tlc::checks {

/// Outcome of one property suite: a counter of individual checks and the
/// first few failure descriptions.
struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> messages;

  void check(bool ok, const std::string& what);
  bool ok() const { return failures == 0; }
};

struct NamedLanguage {
  std::string name;
  Dfa dfa;  // minimal
  RecognizedLanguage lang;
};

NamedLanguage compile_language(const std::string& name, const std::string& regex,
                               const std::vector<char>& alphabet, const Limits& limits = {});

// ---------------------------------------------------------------------
// Seeded generators.

RegexPtr random_regex(std::mt19937_64& rng, const std::vector<char>& alphabet, int depth);

std::string random_word(std::mt19937_64& rng, const std::vector<char>& alphabet, int maxlen);

/// Draws regexes until one fits the caps (minimal automaton within
/// `max_states`, transition monoid within `max_monoid`); nullopt when
/// `attempts` runs out.
std::optional<NamedLanguage> random_language(std::mt19937_64& rng,
                                             const std::vector<char>& alphabet, int max_states,
                                             int max_monoid, int attempts);

/// Random formula of rank <= max_rank whose modality payloads are inverse
/// images of subsets under `eta`.
FormulaPtr random_formula(std::mt19937_64& rng, const Morphism& eta, int max_rank,
                          bool pure_future);

/// Random formula whose payloads are compiled from small random regexes.
FormulaPtr random_regex_formula(std::mt19937_64& rng, const std::vector<char>& alphabet,
                                int max_rank);

// ---------------------------------------------------------------------
// Independent oracles.

/// Pair matrix (m x m, flattened) obtained by brute-force enumeration of
/// all words up to max_len: (s, t) is marked when two words with the same
/// eta image map to s and t under alpha.
std::vector<bool> enumerated_pairs(const Morphism& alpha, const Morphism& eta, int max_len);

struct CongruenceComparison {
  int classes = 0;
  int monoid_size = 0;
  bool profiles_separate_states = true;
  bool image_well_defined = true;
  bool image_injective = true;

  bool agrees() const {
    return profiles_separate_states && classes == monoid_size && image_well_defined &&
           image_injective;
  }
};

/// Quotients the words of length <= max_word_len by the two-sided
/// congruence of the language of `d`, decided through explicit context
/// words (acceptance profiles), and compares the quotient against the
/// transition-monoid morphism: same class count, and the class -> element
/// map is well defined and injective.
CongruenceComparison compare_congruence(const Dfa& d, const RecognizedLanguage& lang,
                                        int max_word_len);

/// Re-evaluates the two sides of the property's equation at the witness
/// elements; true when the recomputed sides match the stored ones and
/// genuinely differ.
bool witness_reproduces(Property p, const FiniteMonoid& m, const OrbitWitness& w);

// ---------------------------------------------------------------------
// Property suites.

/// Omega-power laws, Green relations against the brute-force definition,
/// J-depth monotonicity, and the relations between the equational checks,
/// all on random transition monoids.
SuiteResult monoid_law_suite(std::uint64_t seed, int n_random);

/// (s J t and s <=R t) implies s R t, on random transition monoids.
SuiteResult stability_suite(std::uint64_t seed, int n_monoids);

/// Bounded-congruence quotient vs transition monoid on the given languages
/// (skips those whose minimal automaton exceeds max_states).
SuiteResult congruence_suite(const std::vector<NamedLanguage>& langs, int max_word_len,
                             int max_states);

/// Pair relation laws (diagonal, symmetry, multiplicativity, closed forms
/// for ST and DD, diagonal pairs for eta = alpha) plus the enumeration
/// oracle on small languages.
SuiteResult pair_law_suite(const std::vector<NamedLanguage>& langs, int max_len);

/// Orbit validity (closure, neutrality), containment of each orbit in an
/// eta-class image, pair-set monotonicity, and witness re-evaluation.
SuiteResult orbit_law_suite(const std::vector<NamedLanguage>& langs);

/// Orbit-based verdicts against the class-specific direct constructions:
/// ST vs whole-monoid DA, DD vs local DA on the syntactic semigroup, AT vs
/// MeDA.
SuiteResult agreement_suite(const std::vector<NamedLanguage>& langs);

/// One-directional consequences that can never be violated: UPolBPol
/// membership forces TL membership and aperiodic orbits; the RPol/LPol
/// conditions force the pure fragments; the intersection fragment agrees
/// with the conjunction and forces TL.
SuiteResult implication_suite(const std::vector<NamedLanguage>& langs);

/// evaluate vs evaluate_naive on random (formula, word, position) triples.
SuiteResult semantics_dual_suite(std::uint64_t seed, const std::vector<char>& alphabet,
                                 int n_triples);

/// F[_*] behaves as classic F, F[()] as next (and the past mirrors), time
/// reversal duality, and curated formula/regex sampling agreements.
SuiteResult modality_suite(const std::vector<char>& alphabet, int max_len);

/// Indistinguishability of x (z^k u z^2k v z^k)^2k' ... specific word pairs
/// by sampled formulas of rank <= k whose payloads are recognized by eta:
/// for idempotent values f of eta and words u,v,z mapped to f, the words
///   x (z^k u z^2k v z^k)^k (z^k u z^2k v z^k)^k y   and
///   x (z^k u z^2k v z^k)^k z^k v z^k (z^k u z^2k v z^k)^k y
/// must satisfy the same sampled formulas at the leftmost position.
SuiteResult rank_equivalence_suite(const Morphism& eta, int max_k, int trials,
                                   std::uint64_t seed);

/// Pure-future variant, without the surrounding x, y:
///   (z^k u z^2k v z^k)^k   vs   z^k v z^k (z^k u z^2k v z^k)^k.
SuiteResult rank_equivalence_future_suite(const Morphism& eta, int max_k, int trials,
                                          std::uint64_t seed);

// ---------------------------------------------------------------------
// Aggregate driver used by the selftest command.

struct SelftestReport {
  std::vector<SuiteResult> suites;
  long corpus_entries = 0;
  long corpus_failures = 0;
  std::vector<std::string> corpus_messages;

  bool ok() const;
};

/// Built-in language list used when no corpus is supplied.
std::vector<NamedLanguage> builtin_languages(const Limits& limits = {});

/// Runs every suite at selftest scale plus the expectation comparison for
/// the corpus entries.
SelftestReport run_selftest(const std::vector<CorpusEntry>& corpus, std::uint64_t seed,
                            const Limits& limits = {});

/// Computes the standard verdict map for one language and class:
/// TL, TL_F, TL_P, TL_FP, UPolBPol, RPolBPol, LPolBPol.
std::vector<Verdict> standard_verdicts(const RecognizedLanguage& lang, const ClassSpec& spec);

}  // namespace tlc::checks

#endif  // TLC_CHECKS_HPP

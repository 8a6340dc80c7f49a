#include <doctest.h>

#include <algorithm>

#include "tlc/checks.hpp"
#include "tlc/orbits.hpp"
#include "tlc/regex.hpp"

using namespace tlc;

namespace {
const std::vector<char> kAb = make_alphabet("ab");

RecognizedLanguage lang_of(const std::string& text, const std::string& alphabet = "ab") {
  return checks::compile_language(text, text, make_alphabet(alphabet)).lang;
}
}  // namespace

TEST_CASE("orbits under the trivial class are the corner monoids eMe") {
  const RecognizedLanguage lang = lang_of("(ab)*");
  const Morphism& m = lang.morphism;
  const OrbitAnalysis a = analyze(lang, ClassSpec::st());

  const int one = m.codomain->identity();
  const int ab = m.image_of_word("ab");
  const int ba = m.image_of_word("ba");
  const int zero = m.image_of_word("aa");

  REQUIRE(a.orbits.size() == 4);
  for (const Orbit& o : a.orbits) {
    if (o.base == one) {
      CHECK(o.members.elements().size() == 6);
    } else if (o.base == ab) {
      CHECK(o.members.elements() == std::vector<int>{std::min(ab, zero), std::max(ab, zero)});
    } else if (o.base == ba) {
      CHECK(o.members.elements() == std::vector<int>{std::min(ba, zero), std::max(ba, zero)});
    } else {
      CHECK(o.base == zero);
      CHECK(o.members.elements() == std::vector<int>{zero});
    }
  }
}

TEST_CASE("the DD orbit of an empty-word-only identity is the singleton") {
  const RecognizedLanguage lang = lang_of("(ab)*");
  const OrbitAnalysis a = analyze(lang, ClassSpec::dd());
  const int one = lang.morphism.codomain->identity();
  bool found = false;
  for (const Orbit& o : a.orbits) {
    if (o.base == one) {
      found = true;
      CHECK(o.members.elements() == std::vector<int>{one});
    }
  }
  CHECK(found);
}

TEST_CASE("DD orbits are the corner monoids of the syntactic semigroup") {
  for (const char* text : {"(ab)*", "_*ab_*", "a_*", "b_*a_*b"}) {
    const RecognizedLanguage lang = lang_of(text);
    const FiniteMonoid& m = *lang.morphism.codomain;
    const std::vector<int> semigroup = syntactic_semigroup(lang);
    const OrbitAnalysis a = analyze(lang, ClassSpec::dd());
    for (const Orbit& o : a.orbits) {
      if (!std::binary_search(semigroup.begin(), semigroup.end(), o.base)) {
        continue;  // identity reachable only by the empty word
      }
      std::vector<int> corner;
      for (int s : semigroup) {
        corner.push_back(m.mul(m.mul(o.base, s), o.base));
      }
      std::sort(corner.begin(), corner.end());
      corner.erase(std::unique(corner.begin(), corner.end()), corner.end());
      CHECK(o.members.elements() == corner);
    }
  }
}

TEST_CASE("custom class morphisms may list the alphabet in another order") {
  const RecognizedLanguage lang = lang_of("_*a_*");
  Morphism eta = canonical_morphism(ClassSpec::Kind::AT, make_alphabet("ba"));
  const OrbitAnalysis a = analyze(lang, ClassSpec::custom(eta));
  CHECK(verdict_tl(a).holds);
  // Same pairs as the canonical AT morphism over "ab".
  const OrbitAnalysis b = analyze(lang, ClassSpec::at());
  const int m = lang.morphism.codomain->size();
  for (int s = 0; s < m; ++s) {
    for (int t = 0; t < m; ++t) {
      CHECK(a.pairs.contains(s, t) == b.pairs.contains(s, t));
    }
  }
}

TEST_CASE("orbit construction rejects non-idempotents") {
  const RecognizedLanguage lang = lang_of("(ab)*");
  const PairSet pairs = c_pairs(lang.morphism, ClassSpec::st());
  const int a = lang.morphism.image_of_word("a");
  CHECK_THROWS_AS(orbit(lang.morphism, pairs, a), NotIdempotentError);
}

TEST_CASE("(ab)* is outside TL for the trivial class and inside for DD") {
  const RecognizedLanguage lang = lang_of("(ab)*");

  const Verdict st = verdict_tl(analyze(lang, ClassSpec::st()));
  CHECK(!st.holds);
  REQUIRE(st.witness.has_value());
  CHECK(st.witness->e == lang.morphism.codomain->identity());
  CHECK(st.witness->s == lang.morphism.image_of_word("a"));
  CHECK(st.witness->t == lang.morphism.image_of_word("b"));
  CHECK(checks::witness_reproduces(Property::TL, *lang.morphism.codomain, *st.witness));

  CHECK(verdict_tl(analyze(lang, ClassSpec::dd())).holds);
  CHECK(verdict_tl(analyze(lang, ClassSpec::at())).holds);
}

TEST_CASE("an even-letter-count block language stays outside even for DD") {
  const RecognizedLanguage lang = lang_of("(aa)*", "a");
  CHECK(!verdict_tl(analyze(lang, ClassSpec::dd())).holds);
  CHECK(!specialized_dd(lang).holds);
}

TEST_CASE("prefix and suffix tests split the pure fragments") {
  const RecognizedLanguage starts = lang_of("a_*");
  const OrbitAnalysis a = analyze(starts, ClassSpec::st());
  CHECK(verdict_tl(a).holds);
  CHECK(!verdict_tl_f(a).holds);
  CHECK(verdict_tl_p(a).holds);
  CHECK(!verdict_tl_fp(a).holds);

  const RecognizedLanguage ends = lang_of("_*a");
  const OrbitAnalysis b = analyze(ends, ClassSpec::st());
  CHECK(verdict_tl(b).holds);
  CHECK(verdict_tl_f(b).holds);
  CHECK(!verdict_tl_p(b).holds);
  CHECK(!verdict_tl_fp(b).holds);

  SUBCASE("intersection fragment equals the conjunction") {
    const RecognizedLanguage contains = lang_of("_*a_*");
    const OrbitAnalysis c = analyze(contains, ClassSpec::st());
    CHECK(verdict_tl_f(c).holds);
    CHECK(verdict_tl_p(c).holds);
    CHECK(verdict_tl_fp(c).holds);
  }
}

TEST_CASE("the stronger unambiguous-closure equation") {
  CHECK(check_upol_bpol(analyze(lang_of("_*"), ClassSpec::st())).holds);
  CHECK(check_upol_bpol(analyze(lang_of("_*a_*"), ClassSpec::st())).holds);

  const Verdict v = check_upol_bpol(analyze(lang_of("(ab)*"), ClassSpec::st()));
  CHECK(!v.holds);
  CHECK(!v.sufficient_only);
  REQUIRE(v.witness.has_value());
  CHECK(checks::witness_reproduces(Property::UPolBPol, *lang_of("(ab)*").morphism.codomain,
                                   *v.witness));
}

TEST_CASE("one-sided deterministic-closure conditions") {
  const OrbitAnalysis starts = analyze(lang_of("a_*"), ClassSpec::st());
  const Verdict rpol_starts = check_rpol_bpol(starts);
  CHECK(!rpol_starts.holds);
  CHECK(rpol_starts.sufficient_only);
  CHECK(check_lpol_bpol(starts).holds);

  const OrbitAnalysis ends = analyze(lang_of("_*a"), ClassSpec::st());
  CHECK(check_rpol_bpol(ends).holds);
  CHECK(!check_lpol_bpol(ends).holds);
}

TEST_CASE("direct class oracles") {
  CHECK(specialized_st(lang_of("_*a_*")).holds);
  CHECK(!specialized_st(lang_of("(ab)*")).holds);
  CHECK(specialized_dd(lang_of("(ab)*")).holds);
  CHECK(specialized_at(lang_of("_*a_*")).holds);
  CHECK(!specialized_at(lang_of("((a|b)(a|b))*")).holds);
}

TEST_CASE("every orbit lands inside the image of one eta class") {
  for (const char* text : {"_*a_*", "(ab)*", "a_*", "b_*a_*b"}) {
    for (const ClassSpec& spec : {ClassSpec::st(), ClassSpec::dd(), ClassSpec::at()}) {
      CHECK(!orbit_containment_check(analyze(lang_of(text), spec)).has_value());
    }
  }
}

TEST_CASE("non-syntactic recognizers are rejected for classification") {
  RecognizedLanguage lang = lang_of("_*a_*");
  Morphism bogus = lang.morphism;
  bogus.letter_image.assign(bogus.alphabet.size(), bogus.codomain->identity());
  RecognizedLanguage broken{bogus, lang.accepting};
  CHECK_THROWS_AS(analyze(broken, ClassSpec::st()), InputError);

  SUBCASE("surjective but coarser than the contexts demand") {
    // a -> x with x*x = zero, everything accepting: recognizes the full
    // language, whose syntactic monoid is trivial.
    Morphism chain;
    chain.alphabet = make_alphabet("ab");
    chain.codomain = std::make_shared<FiniteMonoid>(
        3, std::vector<int>{0, 1, 2, 1, 2, 2, 2, 2, 2}, 0);
    chain.letter_image = {1, 0};
    RecognizedLanguage everything{chain, {0, 1, 2}};
    CHECK(everything.morphism.is_surjective());
    CHECK(!is_syntactic(everything));
    CHECK_THROWS_AS(analyze(everything, ClassSpec::st()), InputError);
    CHECK_THROWS_AS(specialized_st(everything), InputError);
  }

  SUBCASE("pipeline outputs pass the check") {
    CHECK(is_syntactic(lang_of("(ab)*")));
    CHECK(is_syntactic(lang_of("b_*a_*b")));
  }
}

TEST_CASE("property names are stable") {
  CHECK(property_name(Property::TL) == "TL");
  CHECK(property_name(Property::TL_FP) == "TL_FP");
  CHECK(property_name(Property::UPolBPol) == "UPolBPol");
  CHECK(property_name(Property::DaGlobal) == "DA-global");
  CHECK(property_name(Property::LocalDa) == "eSe-DA");
  CHECK(property_name(Property::MeDa) == "MeDA");
}

TEST_CASE("orbit, agreement and implication suites pass on the built-ins") {
  const auto langs = checks::builtin_languages();
  CHECK(checks::orbit_law_suite(langs).ok());
  CHECK(checks::agreement_suite(langs).ok());
  CHECK(checks::implication_suite(langs).ok());
}

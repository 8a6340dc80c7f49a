#include <doctest.h>

#include "tlc/automata.hpp"
#include "tlc/checks.hpp"
#include "tlc/json_io.hpp"
#include "tlc/regex.hpp"
#include "tlc/syntactic.hpp"

using namespace tlc;

namespace {
const std::vector<char> kAb = make_alphabet("ab");
}

TEST_CASE("regex parsing") {
  const RegexPtr re = parse_regex("(ab)*", kAb);
  REQUIRE(re->op == Regex::Op::Star);
  REQUIRE(re->left->op == Regex::Op::Concat);
  CHECK(re->left->left->letter == 'a');
  CHECK(re->left->right->letter == 'b');

  SUBCASE("wildcard expands to the letter union") {
    const RegexPtr w = parse_regex("_* a _*", kAb);
    // cat(cat(star(a|b), a), star(a|b))
    REQUIRE(w->op == Regex::Op::Concat);
    CHECK(w->left->op == Regex::Op::Concat);
    CHECK(w->left->right->letter == 'a');
    const RegexPtr star = w->right;
    REQUIRE(star->op == Regex::Op::Star);
    REQUIRE(star->left->op == Regex::Op::Union);
    CHECK(star->left->left->letter == 'a');
    CHECK(star->left->right->letter == 'b');
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_regex("((a", kAb), SyntaxError);
    CHECK_THROWS_AS(parse_regex("a|", kAb), SyntaxError);
    CHECK_THROWS_AS(parse_regex("*a", kAb), SyntaxError);
    CHECK_THROWS_AS(parse_regex("ac", kAb), UnknownLetterError);
    CHECK_THROWS_AS(parse_regex("a", {}), InputError);
    CHECK_THROWS_AS(make_alphabet("aa"), InputError);
    CHECK_THROWS_AS(make_alphabet(""), InputError);
  }
}

TEST_CASE("compilation to minimal automata") {
  const Dfa d = compile(parse_regex("(ab)*", kAb), kAb);
  CHECK(d.states == 3);  // start/accept, expect-b, sink
  CHECK(d.accepts(""));
  CHECK(d.accepts("abab"));
  CHECK(!d.accepts("aba"));
  CHECK(!d.accepts("ba"));

  const Dfa all = compile(parse_regex("_*", kAb), kAb);
  CHECK(all.states == 1);
  CHECK(all.accepting[0]);

  const Dfa none = compile(parse_regex("~(_*)", kAb), kAb);
  CHECK(none.states == 1);
  CHECK(!none.accepting[0]);

  // '~' binds to the atom, so ~_* is (~_)* and that is not empty: it has
  // every word whose length is not exactly one.
  const Dfa star_of_not = compile(parse_regex("~_*", kAb), kAb);
  CHECK(star_of_not.accepts(""));
  CHECK(star_of_not.accepts("ab"));
  CHECK(!star_of_not.accepts("a"));

  SUBCASE("minimization is idempotent") {
    for (const char* text : {"(ab)*", "_*a_*b_*", "a_*&_*b", "~(_*aa_*)"}) {
      const Dfa once = minimize(compile(parse_regex(text, kAb), kAb));
      CHECK(same_structure(once, minimize(once)));
    }
  }

  SUBCASE("state cap") {
    Limits tiny;
    tiny.max_dfa_states = 2;
    CHECK_THROWS_AS(compile(parse_regex("_*a_*a_*", kAb), kAb, tiny), StateLimitError);
  }
}

TEST_CASE("automaton operations respect the languages") {
  const Dfa contains_a = compile(parse_regex("_*a_*", kAb), kAb);
  const Dfa no_a = complement(contains_a);
  CHECK(no_a.accepts("bbb"));
  CHECK(!no_a.accepts("ba"));

  const Dfa starts_a = compile(parse_regex("a_*", kAb), kAb);
  const Dfa both = minimize(intersect(contains_a, starts_a));
  CHECK(both.accepts("ab"));
  CHECK(!both.accepts("b"));

  const Dfa rev = reverse(starts_a);
  CHECK(rev.accepts("ba"));   // reversed language: ends with a
  CHECK(!rev.accepts("ab"));

  CHECK_THROWS_AS(intersect(contains_a, compile(parse_regex("c*", make_alphabet("c")),
                                                make_alphabet("c"))),
                  AlphabetMismatchError);
}

TEST_CASE("syntactic morphism of contains-a is the two-element monoid") {
  const RecognizedLanguage lang = syntactic_morphism(compile(parse_regex("_*a_*", kAb), kAb));
  const Morphism& m = lang.morphism;
  CHECK(m.codomain->size() == 2);
  const int s = m.image_of_letter('a');
  CHECK(s != m.codomain->identity());
  CHECK(m.image_of_letter('b') == m.codomain->identity());
  CHECK(m.codomain->mul(s, s) == s);
  CHECK(lang.accepting == std::vector<int>{s});
}

TEST_CASE("syntactic morphism of (ab)*") {
  const RecognizedLanguage lang = syntactic_morphism(compile(parse_regex("(ab)*", kAb), kAb));
  const Morphism& m = lang.morphism;
  REQUIRE(m.codomain->size() == 6);

  const int a = m.image_of_word("a"), b = m.image_of_word("b");
  const int ab = m.image_of_word("ab"), zero = m.image_of_word("aa");
  CHECK(m.image_of_word("bb") == zero);
  CHECK(m.image_of_word("aba") == a);
  CHECK(m.image_of_word("bab") == b);
  CHECK(m.image_of_word("abab") == ab);
  CHECK(m.codomain->mul(zero, zero) == zero);

  CHECK(lang.accepting == std::vector<int>{m.image_of_word(""), ab});
  CHECK(lang.contains("ababab"));
  CHECK(!lang.contains("abba"));

  SUBCASE("the monoid cap throws a resource error") {
    Limits tiny;
    tiny.max_monoid = 2;
    CHECK_THROWS_AS(syntactic_morphism(compile(parse_regex("(ab)*", kAb), kAb), tiny),
                    MonoidLimitError);
  }
}

TEST_CASE("syntactic morphism of the universal language is trivial") {
  const RecognizedLanguage lang = syntactic_morphism(compile(parse_regex("_*", kAb), kAb));
  CHECK(lang.morphism.codomain->size() == 1);
  CHECK(lang.accepting == std::vector<int>{0});
}

TEST_CASE("word images fold through the table") {
  const RecognizedLanguage lang = syntactic_morphism(compile(parse_regex("(ab)*", kAb), kAb));
  const Morphism& m = lang.morphism;
  CHECK(m.image_of_word("") == m.codomain->identity());
  CHECK(m.image_of_word("abab") == m.image_of_word("ab"));
  CHECK(m.image_of_word("aa") == m.image_of_word("bb"));
  CHECK_THROWS_AS(m.image_of_word("abc"), UnknownLetterError);
}

TEST_CASE("syntactic semigroup excludes the empty-word class when unreachable") {
  const RecognizedLanguage abstar = syntactic_morphism(compile(parse_regex("(ab)*", kAb), kAb));
  CHECK(syntactic_semigroup(abstar).size() == 5);  // identity only via the empty word

  const RecognizedLanguage universal = syntactic_morphism(compile(parse_regex("_*", kAb), kAb));
  CHECK(syntactic_semigroup(universal) == std::vector<int>{0});

  const RecognizedLanguage contains_a = syntactic_morphism(compile(parse_regex("_*a_*", kAb), kAb));
  CHECK(syntactic_semigroup(contains_a).size() == 2);  // b maps to the identity
}

TEST_CASE("morphism surjectivity and restriction") {
  const RecognizedLanguage lang = syntactic_morphism(compile(parse_regex("(ab)*", kAb), kAb));
  CHECK(lang.morphism.is_surjective());

  Morphism partial = lang.morphism;
  partial.letter_image.assign(partial.alphabet.size(), partial.codomain->identity());
  CHECK(!partial.is_surjective());
  const Morphism restricted = partial.restricted_to_image();
  CHECK(restricted.codomain->size() == 1);
  CHECK(restricted.is_surjective());
}

TEST_CASE("round trip: automaton acceptance equals morphism membership") {
  std::mt19937_64 rng(42);
  int tested = 0;
  for (int i = 0; i < 12; ++i) {
    const auto nl = checks::random_language(rng, kAb, 8, 400, 200);
    REQUIRE(nl.has_value());
    std::vector<std::string> layer{""};
    for (int len = 0; len <= 8; ++len) {
      for (const std::string& w : layer) {
        CHECK(nl->dfa.accepts(w) == nl->lang.contains(w));
        ++tested;
      }
      if (len == 8) {
        break;
      }
      std::vector<std::string> next;
      for (const std::string& w : layer) {
        for (char a : kAb) {
          next.push_back(w + a);
        }
      }
      layer = std::move(next);
    }
  }
  CHECK(tested > 1000);
}

TEST_CASE("bounded congruence quotient matches the transition monoid") {
  for (const char* text : {"_*a_*", "(ab)*", "a_*", "_*a", "_*ab_*", "b_*a_*b", "a*b*"}) {
    const auto nl = checks::compile_language(text, text, kAb);
    const auto cmp = checks::compare_congruence(nl.dfa, nl.lang, 6);
    CHECK(cmp.agrees());
  }
}

TEST_CASE("automaton JSON round trip") {
  const Dfa d = compile(parse_regex("(ab)*", kAb), kAb);
  const Dfa back = dfa_from_json(dfa_to_json(d));
  CHECK(same_structure(d, back));
  CHECK_THROWS_AS(dfa_from_json("{\"alphabet\": [\"a\"]}"), InputError);
  CHECK_THROWS_AS(dfa_from_json("not json"), InputError);
}

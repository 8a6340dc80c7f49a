#include <doctest.h>

#include "tlc/checks.hpp"
#include "tlc/formula.hpp"
#include "tlc/pairs.hpp"
#include "tlc/regex.hpp"

using namespace tlc;

namespace {
const std::vector<char> kAb = make_alphabet("ab");
}

TEST_CASE("formula parsing") {
  const FormulaPtr f = parse_formula("F[_*] 'a'", kAb);
  REQUIRE(f->kind == Formula::Kind::Finally);
  CHECK(f->payload->source == "_*");
  CHECK(f->left->kind == Formula::Kind::Letter);
  CHECK(f->left->letter == 'a');

  const FormulaPtr next = parse_formula("F[()] 'a'", kAb);
  CHECK(next->payload->dfa.accepts(""));
  CHECK(!next->payload->dfa.accepts("a"));

  SUBCASE("precedence: & over |, prefix tightest") {
    const FormulaPtr g = parse_formula("'a' | 'b' & min", kAb);
    REQUIRE(g->kind == Formula::Kind::Or);
    CHECK(g->right->kind == Formula::Kind::And);
    const FormulaPtr h = parse_formula("!F[_*] 'a' & max", kAb);
    REQUIRE(h->kind == Formula::Kind::And);
    CHECK(h->left->kind == Formula::Kind::Not);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_formula("F['a' &", kAb), SyntaxError);
    CHECK_THROWS_AS(parse_formula("F[_*]", kAb), SyntaxError);
    CHECK_THROWS_AS(parse_formula("'c'", kAb), UnknownLetterError);
    CHECK_THROWS_AS(parse_formula("F[c*] 'a'", kAb), UnknownLetterError);
    CHECK_THROWS_AS(parse_formula("frob", kAb), SyntaxError);
    CHECK_THROWS_AS(parse_formula("('a'", kAb), SyntaxError);
  }
}

TEST_CASE("rank counts nested modalities only") {
  CHECK(rank(parse_formula("'a'", kAb)) == 0);
  CHECK(rank(parse_formula("!'a'", kAb)) == 0);
  CHECK(rank(parse_formula("F[_*] ('a' & P[_*] 'b')", kAb)) == 2);
  CHECK(rank(parse_formula("F[_*] 'a' | F[_*] 'b'", kAb)) == 1);
}

TEST_CASE("pure fragments") {
  CHECK(is_pure_future(parse_formula("'a'", kAb)));
  CHECK(is_pure_past(parse_formula("'a'", kAb)));
  CHECK(is_pure_future(parse_formula("F[_*] 'a'", kAb)));
  CHECK(!is_pure_past(parse_formula("F[_*] 'a'", kAb)));
  CHECK(!is_pure_future(parse_formula("P[_*] 'a'", kAb)));
  CHECK(is_pure_past(parse_formula("P[_*] 'a'", kAb)));
  CHECK(!is_pure_future(parse_formula("F[_*] P[_*] 'a'", kAb)));
}

TEST_CASE("evaluation at the marked positions") {
  const FormulaPtr fmin = parse_formula("min", kAb);
  const FormulaPtr fmax = parse_formula("max", kAb);
  CHECK(evaluate(fmin, "", 0));
  CHECK(!evaluate(fmin, "", 1));
  CHECK(evaluate(fmax, "", 1));
  CHECK(!evaluate(fmax, "ab", 2));
  CHECK(evaluate(fmax, "ab", 3));
  CHECK_THROWS_AS(evaluate(fmin, "ab", 4), PositionError);
  CHECK_THROWS_AS(evaluate(fmin, "ab", -1), PositionError);
}

TEST_CASE("next-style and classic modalities") {
  CHECK(evaluate(parse_formula("F[()] 'a'", kAb), "ab", 0));
  CHECK(!evaluate(parse_formula("F[()] 'b'", kAb), "ab", 0));
  CHECK(evaluate(parse_formula("F[_*] 'a'", kAb), "ba", 0));
  CHECK(!evaluate(parse_formula("F[_*] 'a'", kAb), "bb", 0));
  CHECK(evaluate(parse_formula("P[_*] 'b'", kAb), "ba", 3));
  CHECK(evaluate(parse_formula("P[()] 'a'", kAb), "ba", 3));

  // Payload filters the infix, not the endpoints.
  const FormulaPtr f = parse_formula("F[(aa)*] 'b'", kAb);
  CHECK(evaluate(f, "aab", 0));
  CHECK(!evaluate(f, "ab", 0));
  CHECK(evaluate(f, "b", 0));
}

TEST_CASE("naive and incremental evaluators agree on fixed cases") {
  const FormulaPtr f = parse_formula("F[_*] ('a' & P[(bb)*] min)", kAb);
  for (const std::string w : {"", "a", "ab", "bba", "abba", "bbbba"}) {
    for (int i = 0; i <= static_cast<int>(w.size()) + 1; ++i) {
      CHECK(evaluate(f, w, i) == evaluate_naive(f, w, i));
    }
  }
}

TEST_CASE("sampling") {
  const FormulaPtr t = parse_formula("true", kAb);
  CHECK(l_min_sample(t, kAb, 3).size() == 1 + 2 + 4 + 8);

  const FormulaPtr next_max = parse_formula("F[()] max", kAb);
  CHECK(l_min_sample(next_max, kAb, 2) == std::vector<std::string>{""});

  const FormulaPtr has_a = parse_formula("F[_*] 'a'", kAb);
  const Dfa contains_a = compile(parse_regex("_*a_*", kAb), kAb);
  const auto sampled = l_min_sample(has_a, kAb, 6);
  for (const std::string& w : sampled) {
    CHECK(contains_a.accepts(w));
  }
  int count = 0;
  std::vector<std::string> layer{""};
  for (int len = 0; len <= 6; ++len) {
    for (const std::string& w : layer) {
      count += contains_a.accepts(w) ? 1 : 0;
    }
    std::vector<std::string> nxt;
    for (const std::string& w : layer) {
      for (char a : kAb) {
        nxt.push_back(w + a);
      }
    }
    layer = std::move(nxt);
  }
  CHECK(static_cast<int>(sampled.size()) == count);

  CHECK(l_max_sample(parse_formula("P[_*] 'b'", kAb), kAb, 3).size() ==
        l_min_sample(parse_formula("F[_*] 'b'", kAb), kAb, 3).size());

  CHECK_THROWS_AS(l_min_sample(t, kAb, 15), InputError);
}

TEST_CASE("mirror duality on fixed formulas") {
  const FormulaPtr f = parse_formula("F[ab_*] ('b' | P[()] min)", kAb);
  const FormulaPtr g = mirror(f);
  for (const std::string w : {"", "ab", "aab", "babab"}) {
    const std::string rev(w.rbegin(), w.rend());
    const int n = static_cast<int>(w.size());
    for (int i = 0; i <= n + 1; ++i) {
      CHECK(evaluate(f, w, i) == evaluate(g, rev, n + 1 - i));
    }
  }
  CHECK(mirror(parse_formula("min", kAb))->kind == Formula::Kind::Max);
}

TEST_CASE("formula printing round-trips through the parser") {
  for (const char* text : {"F[_*] 'a'", "!('a' & min)", "P[(ab)*] (max | 'b')"}) {
    const FormulaPtr f = parse_formula(text, kAb);
    const FormulaPtr g = parse_formula(to_string(f), kAb);
    for (const std::string w : {"", "a", "ab", "ba", "abab"}) {
      for (int i = 0; i <= static_cast<int>(w.size()) + 1; ++i) {
        CHECK(evaluate(f, w, i) == evaluate(g, w, i));
      }
    }
  }
}

TEST_CASE("semantics suites") {
  CHECK(checks::semantics_dual_suite(5, kAb, 300).ok());
  CHECK(checks::modality_suite(kAb, 4).ok());
}

TEST_CASE("sampled-formula indistinguishability for the canonical morphisms") {
  const Morphism dd = canonical_morphism(ClassSpec::Kind::DD, kAb);
  const Morphism at = canonical_morphism(ClassSpec::Kind::AT, kAb);
  CHECK(checks::rank_equivalence_suite(dd, 2, 80, 21).ok());
  CHECK(checks::rank_equivalence_suite(at, 2, 80, 22).ok());
  CHECK(checks::rank_equivalence_future_suite(dd, 2, 80, 23).ok());
  CHECK(checks::rank_equivalence_future_suite(at, 2, 80, 24).ok());
}

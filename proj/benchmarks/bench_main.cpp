#include <benchmark/benchmark.h>

#include <random>

#include "tlc/checks.hpp"
#include "tlc/formula.hpp"
#include "tlc/orbits.hpp"
#include "tlc/regex.hpp"

using namespace tlc;

namespace {

const std::vector<char> kAb = make_alphabet("ab");
const std::vector<char> kAbc = make_alphabet("abc");

void BM_CompileRegex(benchmark::State& state) {
  const RegexPtr re = parse_regex("(ab|ba)*&~(_*aa_*)", kAb);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile(re, kAb));
  }
}
BENCHMARK(BM_CompileRegex);

void BM_SyntacticMorphism(benchmark::State& state) {
  const Dfa d = compile(parse_regex("_*a_*b_*a_*", kAbc), kAbc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(syntactic_morphism(d));
  }
}
BENCHMARK(BM_SyntacticMorphism);

void BM_GreenRelations(benchmark::State& state) {
  const RecognizedLanguage lang =
      syntactic_morphism(compile(parse_regex("_*aba_*|(ab)*", kAb), kAb));
  for (auto _ : state) {
    benchmark::DoNotOptimize(green(*lang.morphism.codomain));
  }
}
BENCHMARK(BM_GreenRelations);

void BM_PairSaturation(benchmark::State& state) {
  const RecognizedLanguage lang =
      syntactic_morphism(compile(parse_regex("c*ac*bc*|_*abc_*", kAbc), kAbc));
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_pairs(lang.morphism, ClassSpec::at()));
  }
}
BENCHMARK(BM_PairSaturation);

void BM_ClassifyEndToEnd(benchmark::State& state) {
  const RecognizedLanguage lang =
      syntactic_morphism(compile(parse_regex("_*aba_*|(ab)*", kAb), kAb));
  for (auto _ : state) {
    const OrbitAnalysis a = analyze(lang, ClassSpec::at());
    benchmark::DoNotOptimize(verdict_tl(a));
    benchmark::DoNotOptimize(verdict_tl_f(a));
    benchmark::DoNotOptimize(verdict_tl_p(a));
    benchmark::DoNotOptimize(check_upol_bpol(a));
  }
}
BENCHMARK(BM_ClassifyEndToEnd);

void BM_EvaluateFormula(benchmark::State& state) {
  const FormulaPtr f = parse_formula("F[_*] ('a' & P[(bb)*] (min | F[()] 'b'))", kAb);
  std::mt19937_64 rng(7);
  std::string w;
  for (int i = 0; i < state.range(0); ++i) {
    w += kAb[rng() % 2];
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(f, w, 0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvaluateFormula)->Range(8, 512)->Complexity();

}  // namespace

BENCHMARK_MAIN();

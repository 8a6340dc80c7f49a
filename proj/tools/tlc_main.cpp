// tlc: decides membership of regular languages in unary-temporal-logic
// classes parameterized by ST, DD, AT or a user-supplied class morphism,
// working through the syntactic morphism and its orbit structure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlc/checks.hpp"
#include "tlc/corpus.hpp"
#include "tlc/errors.hpp"
#include "tlc/formula.hpp"
#include "tlc/json_io.hpp"
#include "tlc/orbits.hpp"
#include "tlc/regex.hpp"

using nlohmann::ordered_json;
using namespace tlc;

namespace {

constexpr int kSchemaVersion = 1;

struct CommonOpts {
  std::string alphabet = "ab";
  std::string class_name = "st";
  bool compact = false;
  int max_states = 4096;
  int max_monoid = 5000;

  Limits limits() const { return Limits{max_states, max_monoid}; }
};

void add_output_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--json", opts.compact, "Compact single-line JSON output");
  cmd->add_option("--max-states", opts.max_states, "Automaton state cap");
  cmd->add_option("--max-monoid", opts.max_monoid, "Transition monoid element cap");
}

void emit(const ordered_json& j, const CommonOpts& opts) {
  std::cout << (opts.compact ? j.dump() : j.dump(2)) << "\n";
}

ClassSpec parse_class(const std::string& name) {
  if (name == "st") {
    return ClassSpec::st();
  }
  if (name == "dd") {
    return ClassSpec::dd();
  }
  if (name == "at") {
    return ClassSpec::at();
  }
  if (name.rfind("custom:", 0) == 0) {
    return ClassSpec::custom(morphism_from_json(read_file(name.substr(7))));
  }
  throw InputError("unknown class '" + name + "' (expected st, dd, at or custom:<path>)");
}

RecognizedLanguage load_language(const std::string& regex_text, const std::string& dfa_path,
                                 const std::vector<char>& alphabet, const Limits& limits) {
  if (!dfa_path.empty()) {
    return syntactic_morphism(dfa_from_json(read_file(dfa_path)), limits);
  }
  return syntactic_morphism(compile(parse_regex(regex_text, alphabet), alphabet, limits), limits);
}

ordered_json witness_json(const OrbitWitness& w) {
  return ordered_json{{"e", w.e}, {"s", w.s}, {"t", w.t}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j[v.sufficient_only ? "holds" : "in"] = v.holds;
  if (v.witness) {
    j["witness"] = witness_json(*v.witness);
  }
  return j;
}

int run_classify(const std::string& language, const std::string& dfa_path,
                 const std::vector<std::string>& properties, const CommonOpts& opts) {
  const auto alphabet = make_alphabet(opts.alphabet);
  const ClassSpec spec = parse_class(opts.class_name);
  const RecognizedLanguage lang = load_language(language, dfa_path, alphabet, opts.limits());
  const OrbitAnalysis analysis = analyze(lang, spec);

  ordered_json verdicts = ordered_json::object();
  auto put = [&](const Verdict& v) { verdicts[property_name(v.property)] = verdict_json(v); };
  for (const std::string& p : properties) {
    if (p == "tl") {
      put(verdict_tl(analysis));
    } else if (p == "tl_f") {
      put(verdict_tl_f(analysis));
    } else if (p == "tl_p") {
      put(verdict_tl_p(analysis));
    } else if (p == "tl_fp") {
      put(verdict_tl_fp(analysis));
    } else if (p == "upolbpol") {
      put(check_upol_bpol(analysis));
    } else if (p == "rpolbpol") {
      put(check_rpol_bpol(analysis));
    } else if (p == "lpolbpol") {
      put(check_lpol_bpol(analysis));
    } else if (p == "specialized") {
      switch (spec.kind()) {
        case ClassSpec::Kind::ST:
          put(specialized_st(lang));
          break;
        case ClassSpec::Kind::DD:
          put(specialized_dd(lang));
          break;
        case ClassSpec::Kind::AT:
          put(specialized_at(lang));
          break;
        case ClassSpec::Kind::Custom:
          throw InputError("no specialized oracle exists for a custom class");
      }
    } else {
      throw InputError("unknown property '" + p + "'");
    }
  }

  ordered_json orbit_sizes = ordered_json::object();
  for (const Orbit& o : analysis.orbits) {
    orbit_sizes[std::to_string(o.base)] = o.members.elements().size();
  }

  ordered_json out{{"schema", kSchemaVersion},
                   {"language", dfa_path.empty() ? language : dfa_path},
                   {"alphabet", opts.alphabet},
                   {"class", spec.name()},
                   {"monoid_size", lang.morphism.codomain->size()},
                   {"orbit_sizes", std::move(orbit_sizes)},
                   {"verdicts", std::move(verdicts)}};
  emit(out, opts);
  return 0;
}

int run_monoid(const std::string& language, const std::string& dfa_path, const CommonOpts& opts) {
  const auto alphabet = make_alphabet(opts.alphabet);
  const RecognizedLanguage lang = load_language(language, dfa_path, alphabet, opts.limits());
  ordered_json morphism = ordered_json::parse(morphism_to_json(lang.morphism));
  ordered_json out{{"schema", kSchemaVersion},
                   {"language", dfa_path.empty() ? language : dfa_path},
                   {"alphabet", morphism["alphabet"]},
                   {"monoid", morphism["monoid"]},
                   {"letters", morphism["letters"]},
                   {"accepting", lang.accepting}};
  emit(out, opts);
  return 0;
}

int run_pairs(const std::string& language, const std::string& dfa_path, const CommonOpts& opts) {
  const auto alphabet = make_alphabet(opts.alphabet);
  const ClassSpec spec = parse_class(opts.class_name);
  const RecognizedLanguage lang = load_language(language, dfa_path, alphabet, opts.limits());
  const PairSet pairs = c_pairs(lang.morphism, spec);
  ordered_json list = ordered_json::array();
  for (const auto& [s, t] : pairs.pairs_sorted()) {
    list.push_back(ordered_json::array({s, t}));
  }
  ordered_json out{{"schema", kSchemaVersion},
                   {"language", dfa_path.empty() ? language : dfa_path},
                   {"alphabet", opts.alphabet},
                   {"class", spec.name()},
                   {"monoid_size", lang.morphism.codomain->size()},
                   {"pairs", std::move(list)}};
  emit(out, opts);
  return 0;
}

int run_orbits(const std::string& language, const std::string& dfa_path, const CommonOpts& opts) {
  const auto alphabet = make_alphabet(opts.alphabet);
  const ClassSpec spec = parse_class(opts.class_name);
  const RecognizedLanguage lang = load_language(language, dfa_path, alphabet, opts.limits());
  const OrbitAnalysis analysis = analyze(lang, spec);
  ordered_json list = ordered_json::array();
  for (const Orbit& o : analysis.orbits) {
    list.push_back(ordered_json{{"e", o.base}, {"members", o.members.elements()}});
  }
  ordered_json out{{"schema", kSchemaVersion},
                   {"language", dfa_path.empty() ? language : dfa_path},
                   {"alphabet", opts.alphabet},
                   {"class", spec.name()},
                   {"monoid_size", lang.morphism.codomain->size()},
                   {"orbits", std::move(list)}};
  emit(out, opts);
  return 0;
}

int run_eval(const std::string& formula_text, const std::string& word, const std::string& at,
             const CommonOpts& opts) {
  const auto alphabet = make_alphabet(opts.alphabet);
  const FormulaPtr f = parse_formula(formula_text, alphabet, opts.limits());
  if (at != "min" && at != "max") {
    throw InputError("--at must be min or max");
  }
  const int position = at == "min" ? 0 : static_cast<int>(word.size()) + 1;
  const bool result = evaluate(f, word, position);
  ordered_json out{{"schema", kSchemaVersion}, {"formula", formula_text}, {"word", word},
                   {"at", at},                 {"position", position},    {"result", result}};
  emit(out, opts);
  return 0;
}

int run_sample(const std::string& formula_text, int maxlen, const std::string& at,
               const CommonOpts& opts) {
  const auto alphabet = make_alphabet(opts.alphabet);
  const FormulaPtr f = parse_formula(formula_text, alphabet, opts.limits());
  if (at != "min" && at != "max") {
    throw InputError("--at must be min or max");
  }
  const auto words =
      at == "min" ? l_min_sample(f, alphabet, maxlen) : l_max_sample(f, alphabet, maxlen);
  ordered_json out{{"schema", kSchemaVersion}, {"formula", formula_text}, {"maxlen", maxlen},
                   {"at", at},                 {"count", words.size()},   {"words", words}};
  emit(out, opts);
  return 0;
}

int run_selftest(const std::string& corpus_path, std::uint64_t seed, const CommonOpts& opts) {
  std::vector<CorpusEntry> corpus;
  if (!corpus_path.empty()) {
    corpus = load_corpus(corpus_path);
  }
  const checks::SelftestReport rep = checks::run_selftest(corpus, seed, opts.limits());
  ordered_json suites = ordered_json::array();
  for (const checks::SuiteResult& s : rep.suites) {
    ordered_json j{{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}};
    if (!s.messages.empty()) {
      j["messages"] = s.messages;
    }
    suites.push_back(std::move(j));
  }
  ordered_json out{{"schema", kSchemaVersion},
                   {"seed", seed},
                   {"suites", std::move(suites)},
                   {"corpus_entries", rep.corpus_entries},
                   {"corpus_failures", rep.corpus_failures},
                   {"ok", rep.ok()}};
  if (!rep.corpus_messages.empty()) {
    out["corpus_messages"] = rep.corpus_messages;
  }
  emit(out, opts);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Membership of regular languages in unary-temporal-logic classes"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string language, dfa_path, word, at = "min", corpus_path;
  std::vector<std::string> properties = {"tl", "tl_f", "tl_p", "tl_fp", "upolbpol"};
  int maxlen = 8;
  std::uint64_t seed = 0;

  CLI::App* classify = app.add_subcommand("classify", "Decide class memberships of a language");
  classify->add_option("language", language, "Regex over the alphabet");
  classify->add_option("--dfa", dfa_path, "Automaton JSON file instead of a regex");
  classify->add_option("--alphabet", opts.alphabet, "Alphabet letters, e.g. ab");
  classify->add_option("--class", opts.class_name, "st | dd | at | custom:<path>");
  classify->add_option("--properties", properties,
                       "Any of: tl tl_f tl_p tl_fp upolbpol rpolbpol lpolbpol specialized")
      ->delimiter(',');
  add_output_flags(classify, opts);

  CLI::App* monoid = app.add_subcommand("monoid", "Print the syntactic morphism");
  monoid->add_option("language", language, "Regex over the alphabet");
  monoid->add_option("--dfa", dfa_path, "Automaton JSON file instead of a regex");
  monoid->add_option("--alphabet", opts.alphabet, "Alphabet letters");
  add_output_flags(monoid, opts);

  CLI::App* pairs = app.add_subcommand("pairs", "Print the pair relation for a class");
  pairs->add_option("language", language, "Regex over the alphabet");
  pairs->add_option("--dfa", dfa_path, "Automaton JSON file instead of a regex");
  pairs->add_option("--alphabet", opts.alphabet, "Alphabet letters");
  pairs->add_option("--class", opts.class_name, "st | dd | at | custom:<path>");
  add_output_flags(pairs, opts);

  CLI::App* orbits = app.add_subcommand("orbits", "Print the orbit of every idempotent");
  orbits->add_option("language", language, "Regex over the alphabet");
  orbits->add_option("--dfa", dfa_path, "Automaton JSON file instead of a regex");
  orbits->add_option("--alphabet", opts.alphabet, "Alphabet letters");
  orbits->add_option("--class", opts.class_name, "st | dd | at | custom:<path>");
  add_output_flags(orbits, opts);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a formula on a word");
  eval->add_option("formula", language, "Temporal formula")->required();
  eval->add_option("--word", word, "Input word (may be empty)");
  eval->add_option("--alphabet", opts.alphabet, "Alphabet letters");
  eval->add_option("--at", at, "Evaluation position: min or max");
  add_output_flags(eval, opts);

  CLI::App* sample = app.add_subcommand("sample", "List satisfying words up to a length");
  sample->add_option("formula", language, "Temporal formula")->required();
  sample->add_option("--maxlen", maxlen, "Maximum word length (<= 14)");
  sample->add_option("--alphabet", opts.alphabet, "Alphabet letters");
  sample->add_option("--at", at, "Evaluation position: min or max");
  add_output_flags(sample, opts);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the property suites and corpus checks");
  selftest->add_option("--corpus", corpus_path, "Corpus file (JSON lines)");
  selftest->add_option("--seed", seed, "Random seed for the generators");
  add_output_flags(selftest, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, misuse is an input error
  }

  try {
    if (classify->parsed()) {
      if (language.empty() && dfa_path.empty()) {
        throw InputError("give a regex or --dfa");
      }
      return run_classify(language, dfa_path, properties, opts);
    }
    if (monoid->parsed()) {
      if (language.empty() && dfa_path.empty()) {
        throw InputError("give a regex or --dfa");
      }
      return run_monoid(language, dfa_path, opts);
    }
    if (pairs->parsed()) {
      if (language.empty() && dfa_path.empty()) {
        throw InputError("give a regex or --dfa");
      }
      return run_pairs(language, dfa_path, opts);
    }
    if (orbits->parsed()) {
      if (language.empty() && dfa_path.empty()) {
        throw InputError("give a regex or --dfa");
      }
      return run_orbits(language, dfa_path, opts);
    }
    if (eval->parsed()) {
      return run_eval(language, word, at, opts);
    }
    if (sample->parsed()) {
      return run_sample(language, maxlen, at, opts);
    }
    if (selftest->parsed()) {
      return run_selftest(corpus_path, seed, opts);
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

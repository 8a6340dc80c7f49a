#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TLC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

json run_json(const std::string& args, int expected_exit = 0) {
  const CliResult r = run_cli(args);
  CHECK(r.exit_code == expected_exit);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("classify reports memberships with exit code zero") {
  const json st = run_json("classify \"(ab)*\" --alphabet ab --class st --json");
  CHECK(st["schema"] == 1);
  CHECK(st["class"] == "st");
  CHECK(st["monoid_size"] == 6);
  CHECK(st["verdicts"]["TL"]["in"] == false);
  CHECK(st["verdicts"]["TL"].contains("witness"));
  CHECK(st["verdicts"]["TL"]["witness"].contains("lhs"));

  const json dd = run_json("classify \"(ab)*\" --alphabet ab --class dd --json");
  CHECK(dd["verdicts"]["TL"]["in"] == true);
  CHECK(!dd["verdicts"]["TL"].contains("witness"));

  const json at = run_json("classify \"_*\" --alphabet ab --class at --json");
  for (const char* p : {"TL", "TL_F", "TL_P", "TL_FP", "UPolBPol"}) {
    CHECK(at["verdicts"][p]["in"] == true);
  }

  const json rp = run_json(
      "classify \"a_*\" --alphabet ab --class st --properties rpolbpol,lpolbpol --json");
  CHECK(rp["verdicts"]["RPolBPol"]["holds"] == false);
  CHECK(rp["verdicts"]["LPolBPol"]["holds"] == true);

  const json sp = run_json(
      "classify \"(ab)*\" --alphabet ab --class dd --properties tl,specialized --json");
  CHECK(sp["verdicts"]["eSe-DA"]["in"] == true);
}

TEST_CASE("classification output is byte-stable across runs") {
  const std::string cmd = "classify \"b_*a_*b\" --alphabet ab --class at --json";
  CHECK(run_cli(cmd).out == run_cli(cmd).out);
}

TEST_CASE("error exit codes distinguish bad input from resource limits") {
  CHECK(run_cli("classify \"((a\" --alphabet ab").exit_code == 2);
  CHECK(run_cli("classify \"abc\" --alphabet ab").exit_code == 2);
  CHECK(run_cli("classify \"(ab)*\" --alphabet ab --class frob").exit_code == 2);
  CHECK(run_cli("classify \"(ab)*\" --alphabet ab --max-monoid 2").exit_code == 3);
  CHECK(run_cli("classify \"_*a_*a_*\" --alphabet ab --max-states 2").exit_code == 3);
  CHECK(run_cli("eval \"F[_*] 'a'\" --word ab --at sideways").exit_code == 2);
}

TEST_CASE("monoid output can be fed back as a custom class") {
  const CliResult r = run_cli("monoid \"_*a_*\" --alphabet ab --json");
  CHECK(r.exit_code == 0);
  const json m = json::parse(r.out);
  CHECK(m["monoid"]["size"] == 2);
  CHECK(m["letters"]["b"] == m["monoid"]["identity"]);
  CHECK(m["accepting"].size() == 1);

  const std::string path = "cli_test_custom_morphism.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  // Pairs against the language's own recognizer collapse to the diagonal,
  // so the orbits are singletons and everything is inside.
  const json custom =
      run_json("classify \"_*a_*\" --alphabet ab --class custom:" + path + " --json");
  CHECK(custom["class"] == "custom");
  CHECK(custom["verdicts"]["TL"]["in"] == true);
  std::remove(path.c_str());
}

TEST_CASE("pairs and orbits commands") {
  const json p = run_json("pairs \"(ab)*\" --alphabet ab --class dd --json");
  CHECK(p["pairs"].size() == 26);  // (1,1) plus the 5x5 semigroup square

  const json o = run_json("orbits \"(ab)*\" --alphabet ab --class dd --json");
  CHECK(o["orbits"].size() == 4);
  bool identity_orbit_found = false;
  for (const auto& orb : o["orbits"]) {
    if (orb["e"] == 0) {
      identity_orbit_found = true;
      CHECK(orb["members"] == json::array({0}));
    }
  }
  CHECK(identity_orbit_found);
}

TEST_CASE("eval and sample") {
  CHECK(run_json("eval \"F[_*] 'a'\" --word bab --alphabet ab --json")["result"] == true);
  CHECK(run_json("eval \"F[_*] 'a'\" --word bbb --alphabet ab --json")["result"] == false);
  CHECK(run_json("eval \"min\" --alphabet ab --json")["result"] == true);
  CHECK(run_json("eval \"P[_*] 'a'\" --word ab --at max --alphabet ab --json")["result"] == true);

  const json s = run_json("sample \"F[()] max\" --alphabet ab --maxlen 2 --json");
  CHECK(s["words"] == json::array({""}));
  CHECK(run_cli("sample \"true\" --alphabet ab --maxlen 15").exit_code == 2);
}

TEST_CASE("selftest runs the suites and checks the bundled corpus") {
  const std::string corpus = TLC_CORPUS_PATH;
  const CliResult r1 = run_cli("selftest --corpus " + corpus + " --json");
  CHECK(r1.exit_code == 0);
  const json rep = json::parse(r1.out);
  CHECK(rep["ok"] == true);
  CHECK(rep["corpus_failures"] == 0);
  CHECK(rep["corpus_entries"].get<int>() > 500);
  CHECK(rep["suites"].size() >= 10);

  SUBCASE("identical invocations produce byte-identical output") {
    const CliResult r2 = run_cli("selftest --corpus " + corpus + " --json");
    CHECK(r1.out == r2.out);
  }

  SUBCASE("a wrong expectation makes selftest fail") {
    const std::string path = "cli_test_bad_corpus.jsonl";
    {
      std::ofstream f(path);
      f << R"({"id": "bad", "alphabet": ["a","b"], "language": "(ab)*", )"
        << R"("expected": {"st": {"TL": true}}})" << "\n";
    }
    const CliResult bad = run_cli("selftest --corpus " + path + " --json");
    CHECK(bad.exit_code == 1);
    const json doc = json::parse(bad.out);
    CHECK(doc["ok"] == false);
    CHECK(doc["corpus_failures"].get<int>() > 0);
    std::remove(path.c_str());
  }

  SUBCASE("an empty corpus still runs the property suites") {
    const std::string path = "cli_test_empty_corpus.jsonl";
    { std::ofstream f(path); }
    const CliResult empty = run_cli("selftest --corpus " + path + " --json");
    CHECK(empty.exit_code == 0);
    CHECK(json::parse(empty.out)["ok"] == true);
    std::remove(path.c_str());
  }
}

TEST_CASE("dfa input path") {
  const std::string path = "cli_test_parity.json";
  {
    std::ofstream f(path);
    f << R"({"alphabet": ["a","b"], "states": 2, "initial": 0, "accepting": [0],)"
      << R"( "delta": [{"a": 1, "b": 0}, {"a": 0, "b": 1}]})";
  }
  const json v = run_json("classify --dfa " + path + " --alphabet ab --class st --json");
  CHECK(v["monoid_size"] == 2);
  CHECK(v["verdicts"]["TL"]["in"] == false);  // parity needs modular counting
  std::remove(path.c_str());
}

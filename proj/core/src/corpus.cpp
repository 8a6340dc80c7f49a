#include "tlc/corpus.hpp"

#include <fstream>

#include <json.hpp>

#include "tlc/errors.hpp"
#include "tlc/json_io.hpp"
#include "tlc/regex.hpp"

namespace tlc {

using nlohmann::ordered_json;

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read corpus file: " + path);
  }
  std::string dir;
  if (const auto slash = path.find_last_of('/'); slash != std::string::npos) {
    dir = path.substr(0, slash + 1);
  }
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw InputError("corpus line " + std::to_string(lineno) + " is not valid JSON");
    }
    try {
      CorpusEntry e;
      e.id = j.at("id").get<std::string>();
      std::string letters;
      for (const auto& v : j.at("alphabet")) {
        letters += v.get<std::string>();
      }
      e.alphabet = make_alphabet(letters);
      if (j.contains("dfa")) {
        e.dfa_path = dir + j.at("dfa").get<std::string>();
      } else {
        e.language = j.at("language").get<std::string>();
      }
      if (j.contains("expected")) {
        for (const auto& [cls, props] : j.at("expected").items()) {
          for (const auto& [prop, val] : props.items()) {
            e.expected[cls][prop] = val.get<bool>();
          }
        }
      }
      out.push_back(std::move(e));
    } catch (const ordered_json::exception& ex) {
      throw InputError("corpus line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return out;
}

RecognizedLanguage corpus_language(const CorpusEntry& entry, const Limits& limits) {
  if (!entry.dfa_path.empty()) {
    return syntactic_morphism(dfa_from_json(read_file(entry.dfa_path)), limits);
  }
  const RegexPtr re = parse_regex(entry.language, entry.alphabet);
  return syntactic_morphism(compile(re, entry.alphabet, limits), limits);
}

}  // namespace tlc

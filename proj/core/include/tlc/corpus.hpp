#ifndef TLC_CORPUS_HPP
#define TLC_CORPUS_HPP

#include <map>
#include <string>
#include <vector>

#include "tlc/limits.hpp"
#include "tlc/syntactic.hpp"

namespace tlc {

/// One line of a JSON-lines corpus file:
///   {"id": "...", "alphabet": ["a","b"], "language": "<regex>",
///    "expected": {"st": {"TL": true, ...}, ...}}
/// A language may instead be given as {"dfa": "<path>"} relative to the
/// corpus file. Expected verdicts are optional; when present they are
/// compared against computed verdicts by the selftest command.
struct CorpusEntry {
  std::string id;
  std::vector<char> alphabet;
  std::string language;  // regex text; empty when dfa_path is set
  std::string dfa_path;  // resolved against the corpus file directory
  std::map<std::string, std::map<std::string, bool>> expected;  // class -> property -> in
};

std::vector<CorpusEntry> load_corpus(const std::string& path);

/// Compiles the entry down to its syntactic morphism.
RecognizedLanguage corpus_language(const CorpusEntry& entry, const Limits& limits = {});

}  // namespace tlc

#endif  // TLC_CORPUS_HPP

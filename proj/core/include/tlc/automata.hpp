#ifndef TLC_AUTOMATA_HPP
#define TLC_AUTOMATA_HPP

#include <string_view>
#include <vector>

#include "tlc/limits.hpp"
#include "tlc/regex.hpp"

namespace tlc {

/// Complete deterministic finite automaton. The transition function is
/// total: `delta` has one entry per (state, letter-index) pair.
struct Dfa {
  std::vector<char> alphabet;
  int states = 0;
  int initial = 0;
  std::vector<bool> accepting;  // indexed by state
  std::vector<int> delta;       // states x alphabet, row-major

  int step(int q, int letter_index) const {
    return delta[static_cast<std::size_t>(q) * alphabet.size() + letter_index];
  }

  int letter_index(char a) const;  // throws UnknownLetterError

  /// Runs the automaton; throws UnknownLetterError on foreign letters.
  bool accepts(std::string_view word) const;
};

/// Compiles a regex to the minimal complete DFA of its language. Union,
/// concatenation and iteration go through a Thompson construction and the
/// subset construction; complement and intersection are applied on DFAs.
/// Throws StateLimitError when an intermediate automaton exceeds the cap.
Dfa compile(const RegexPtr& re, const std::vector<char>& alphabet, const Limits& limits = {});

/// Hopcroft-style partition refinement plus canonical breadth-first state
/// renumbering, so equal languages yield identical structures.
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b, const Limits& limits = {});
Dfa reverse(const Dfa& d, const Limits& limits = {});

bool same_structure(const Dfa& a, const Dfa& b);

}  // namespace tlc

#endif  // TLC_AUTOMATA_HPP

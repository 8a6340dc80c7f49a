#ifndef TLC_JSON_IO_HPP
#define TLC_JSON_IO_HPP

#include <string>

#include "tlc/automata.hpp"
#include "tlc/monoid.hpp"
#include "tlc/syntactic.hpp"

namespace tlc {

/// Serialized formats (all JSON):
///
///   monoid    {"size": n, "identity": i, "table": [[...], ...]}
///             rows are indexed by the left operand
///   dfa       {"alphabet": ["a","b"], "states": n, "initial": 0,
///              "accepting": [...], "delta": [{"a": j, "b": k}, ...]}
///   morphism  {"alphabet": [...], "monoid": <monoid>, "letters": {"a": i, ...}}
///
/// Parsers throw InputError on malformed documents; the monoid parser runs
/// full table validation.

std::string monoid_to_json(const FiniteMonoid& m);
MonoidPtr monoid_from_json(const std::string& text);

std::string dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const std::string& text);

std::string morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace tlc

#endif  // TLC_JSON_IO_HPP

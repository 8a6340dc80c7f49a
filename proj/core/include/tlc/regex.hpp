#ifndef TLC_REGEX_HPP
#define TLC_REGEX_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tlc {

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

/// Regular expression AST over an explicit finite alphabet.
///
/// Grammar (whitespace ignored):
///   expr  := alt
///   alt   := inter ('|' inter)*
///   inter := cat ('&' cat)*
///   cat   := rep+
///   rep   := atom ('*' | '+')*
///   atom  := letter | '_' | '()' | '~' atom | '(' expr ')'
///
/// '_' is sugar for the union of all alphabet letters and is expanded at
/// parse time; '()' denotes the empty word; '~' is complement relative to
/// the session alphabet; '&' is intersection.
struct Regex {
  enum class Op { Empty, Epsilon, Letter, Concat, Union, Inter, Complement, Star, Plus };

  Op op;
  char letter = '\0';
  RegexPtr left;
  RegexPtr right;

  static RegexPtr empty();
  static RegexPtr epsilon();
  static RegexPtr lit(char a);
  static RegexPtr concat(RegexPtr a, RegexPtr b);
  static RegexPtr alt(RegexPtr a, RegexPtr b);
  static RegexPtr inter(RegexPtr a, RegexPtr b);
  static RegexPtr complement(RegexPtr a);
  static RegexPtr star(RegexPtr a);
  static RegexPtr plus(RegexPtr a);
};

/// Parses `text` over `alphabet`. Throws SyntaxError on malformed input,
/// UnknownLetterError for letters outside the alphabet, and InputError for
/// an empty or duplicated alphabet.
RegexPtr parse_regex(std::string_view text, const std::vector<char>& alphabet);

/// Parenthesized round-trip form (wildcards already expanded).
std::string to_string(const RegexPtr& re);

/// Validates an alphabet given as a string of distinct letters ("ab").
std::vector<char> make_alphabet(std::string_view letters);

}  // namespace tlc

#endif  // TLC_REGEX_HPP

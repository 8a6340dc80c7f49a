#ifndef TLC_FORMULA_HPP
#define TLC_FORMULA_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/automata.hpp"
#include "tlc/limits.hpp"

namespace tlc {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// The language attached to a temporal modality, kept as a recognizer plus
/// a display form.
struct ModalPayload {
  std::string source;
  Dfa dfa;
};

/// Temporal formula over words with two end markers. A word w of length n
/// is read over positions 0..n+1: position 0 carries the label `min`,
/// position n+1 carries `max`, and position i (1 <= i <= n) carries the
/// letter w[i-1].
///
/// Semantics of the modalities: F[L] psi holds at i when some position
/// j > i satisfies psi and the letters strictly between i and j form a word
/// of L; P[L] psi is the mirror toward smaller positions.
///
/// Grammar ('&' binds tighter than '|', prefix operators tightest):
///   phi := 'true' | 'false' | 'min' | 'max' | '\'' letter '\''
///        | '!' phi | phi '&' phi | phi '|' phi
///        | 'F[' regex ']' phi | 'P[' regex ']' phi | '(' phi ')'
struct Formula {
  enum class Kind { True, False, Min, Max, Letter, Not, And, Or, Finally, Previously };

  Kind kind;
  char letter = '\0';
  std::shared_ptr<const ModalPayload> payload;  // modalities only
  FormulaPtr left;
  FormulaPtr right;  // And / Or only

  static FormulaPtr make_true();
  static FormulaPtr make_false();
  static FormulaPtr min();
  static FormulaPtr max();
  static FormulaPtr letter_atom(char a);
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr finally(std::shared_ptr<const ModalPayload> payload, FormulaPtr f);
  static FormulaPtr previously(std::shared_ptr<const ModalPayload> payload, FormulaPtr f);
};

FormulaPtr parse_formula(std::string_view text, const std::vector<char>& alphabet,
                         const Limits& limits = {});

/// Longest chain of nested modalities; boolean connectives are free.
int rank(const FormulaPtr& f);

bool is_pure_future(const FormulaPtr& f);
bool is_pure_past(const FormulaPtr& f);

/// Satisfaction at `position` (0..|word|+1; PositionError otherwise).
/// Computes one boolean per position bottom-up, with an incremental
/// recognizer run per modality node, so a full evaluation is
/// O(|word|^2 * |formula|).
bool evaluate(const FormulaPtr& f, std::string_view word, int position);

/// Literal transcription of the semantics: recursion over positions with
/// the infix re-run from scratch each time. Slow; kept as an independent
/// cross-check of `evaluate`.
bool evaluate_naive(const FormulaPtr& f, std::string_view word, int position);

/// All words of length <= maxlen (maxlen <= 14) satisfying the formula at
/// the leftmost unlabeled position, in shortlex order.
std::vector<std::string> l_min_sample(const FormulaPtr& f, const std::vector<char>& alphabet,
                                      int maxlen);

/// Same at the rightmost unlabeled position.
std::vector<std::string> l_max_sample(const FormulaPtr& f, const std::vector<char>& alphabet,
                                      int maxlen);

/// Time reversal: swaps F/P (with reversed payload languages) and min/max.
/// Satisfies: evaluate(f, w, i) == evaluate(mirror(f), reverse(w), |w|+1-i).
FormulaPtr mirror(const FormulaPtr& f, const Limits& limits = {});

std::string to_string(const FormulaPtr& f);

}  // namespace tlc

#endif  // TLC_FORMULA_HPP

#ifndef TLC_LIMITS_HPP
#define TLC_LIMITS_HPP

namespace tlc {

/// Resource caps. Exceeding one raises a ResourceLimitError, which is a
/// distinct outcome from any verdict: the tool refuses rather than guesses.
struct Limits {
  int max_dfa_states = 4096;
  int max_monoid = 5000;
};

}  // namespace tlc

#endif  // TLC_LIMITS_HPP

#ifndef TLC_ERRORS_HPP
#define TLC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlc {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad syntax, inconsistent tables, unknown letters, ...
class InputError : public Error {
public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

/// A configurable resource cap was exceeded. Distinct from InputError so
/// that callers can report "too big" instead of "wrong".
class ResourceLimitError : public Error {
public:
  explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

class SyntaxError : public InputError {
public:
  SyntaxError(const std::string& msg, std::size_t position)
      : InputError(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class UnknownLetterError : public InputError {
public:
  explicit UnknownLetterError(char letter)
      : InputError(std::string("letter '") + letter + "' is not in the alphabet") {}
};

class AssociativityError : public InputError {
public:
  AssociativityError(int s, int t, int u)
      : InputError("multiplication table is not associative at (" + std::to_string(s) +
                    ", " + std::to_string(t) + ", " + std::to_string(u) + ")") {}
};

class IdentityError : public InputError {
public:
  explicit IdentityError(int s)
      : InputError("identity law fails at element " + std::to_string(s)) {}
};

class AlphabetMismatchError : public InputError {
public:
  AlphabetMismatchError() : InputError("morphisms are defined over different alphabets") {}
};

class NotIdempotentError : public InputError {
public:
  explicit NotIdempotentError(int e)
      : InputError("element " + std::to_string(e) + " is not idempotent") {}
};

/// The orbit of an idempotent failed closure or neutrality validation.
/// Signals an inconsistent custom class morphism (or an internal bug).
class ClosureError : public InputError {
public:
  explicit ClosureError(const std::string& msg) : InputError(msg) {}
};

class PositionError : public InputError {
public:
  PositionError(int position, std::size_t word_length)
      : InputError("position " + std::to_string(position) + " is outside 0.." +
                    std::to_string(word_length + 1)) {}
};

class StateLimitError : public ResourceLimitError {
public:
  explicit StateLimitError(int limit)
      : ResourceLimitError("automaton exceeds the state cap of " + std::to_string(limit)) {}
};

class MonoidLimitError : public ResourceLimitError {
public:
  explicit MonoidLimitError(int limit)
      : ResourceLimitError("transition monoid exceeds the element cap of " +
                            std::to_string(limit)) {}
};

}  // namespace tlc

#endif  // TLC_ERRORS_HPP

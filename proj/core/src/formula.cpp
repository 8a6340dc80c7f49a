#include "tlc/formula.hpp"

#include <algorithm>
#include <cctype>

#include "tlc/errors.hpp"
#include "tlc/regex.hpp"

namespace tlc {

namespace {
FormulaPtr atom(Formula::Kind k, char letter = '\0') {
  Formula f{k};
  f.letter = letter;
  return std::make_shared<Formula>(std::move(f));
}

FormulaPtr unary(Formula::Kind k, FormulaPtr sub, std::shared_ptr<const ModalPayload> payload = nullptr) {
  Formula f{k};
  f.left = std::move(sub);
  f.payload = std::move(payload);
  return std::make_shared<Formula>(std::move(f));
}

FormulaPtr binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  Formula f{k};
  f.left = std::move(a);
  f.right = std::move(b);
  return std::make_shared<Formula>(std::move(f));
}
}  // namespace

FormulaPtr Formula::make_true() { return atom(Kind::True); }
FormulaPtr Formula::make_false() { return atom(Kind::False); }
FormulaPtr Formula::min() { return atom(Kind::Min); }
FormulaPtr Formula::max() { return atom(Kind::Max); }
FormulaPtr Formula::letter_atom(char a) { return atom(Kind::Letter, a); }
FormulaPtr Formula::negate(FormulaPtr f) { return unary(Kind::Not, std::move(f)); }
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) { return binary(Kind::And, std::move(a), std::move(b)); }
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) { return binary(Kind::Or, std::move(a), std::move(b)); }

FormulaPtr Formula::finally(std::shared_ptr<const ModalPayload> payload, FormulaPtr f) {
  return unary(Kind::Finally, std::move(f), std::move(payload));
}

FormulaPtr Formula::previously(std::shared_ptr<const ModalPayload> payload, FormulaPtr f) {
  return unary(Kind::Previously, std::move(f), std::move(payload));
}

namespace {

class FormulaParser {
public:
  FormulaParser(std::string_view text, const std::vector<char>& alphabet, const Limits& limits)
      : text_(text), alphabet_(alphabet), limits_(limits) {}

  FormulaPtr run() {
    FormulaPtr f = parse_or();
    skip_ws();
    if (pos_ != text_.size()) {
      throw SyntaxError("unexpected trailing input", pos_);
    }
    return f;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return text_[pos_];
  }

  bool eat(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (!at_end() && peek() == '|') {
      ++pos_;
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (!at_end() && peek() == '&') {
      ++pos_;
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  std::shared_ptr<const ModalPayload> parse_payload() {
    skip_ws();
    if (!eat('[')) {
      throw SyntaxError("expected '[' after modality", pos_);
    }
    const std::size_t start = pos_;
    const std::size_t close = text_.find(']', start);
    if (close == std::string_view::npos) {
      throw SyntaxError("unterminated modality payload", start);
    }
    const std::string src(text_.substr(start, close - start));
    pos_ = close + 1;
    ModalPayload payload{src, compile(parse_regex(src, alphabet_), alphabet_, limits_)};
    return std::make_shared<const ModalPayload>(std::move(payload));
  }

  FormulaPtr parse_unary() {
    if (at_end()) {
      throw SyntaxError("expected a formula", pos_);
    }
    const char c = peek();
    if (c == '!') {
      ++pos_;
      return Formula::negate(parse_unary());
    }
    if (c == 'F' || c == 'P') {
      ++pos_;
      auto payload = parse_payload();
      FormulaPtr sub = parse_unary();
      return c == 'F' ? Formula::finally(std::move(payload), std::move(sub))
                      : Formula::previously(std::move(payload), std::move(sub));
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (at_end()) {
      throw SyntaxError("expected a formula", pos_);
    }
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FormulaPtr f = parse_or();
      if (at_end() || !eat(')')) {
        throw SyntaxError("unbalanced '('", pos_);
      }
      return f;
    }
    if (c == '\'') {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '\'') {
        throw SyntaxError("expected a quoted single letter", start);
      }
      const char letter = text_[pos_];
      pos_ += 2;
      if (std::find(alphabet_.begin(), alphabet_.end(), letter) == alphabet_.end()) {
        throw UnknownLetterError(letter);
      }
      return Formula::letter_atom(letter);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
      const std::string_view word = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (word == "true") {
        return Formula::make_true();
      }
      if (word == "false") {
        return Formula::make_false();
      }
      if (word == "min") {
        return Formula::min();
      }
      if (word == "max") {
        return Formula::max();
      }
      throw SyntaxError("unknown keyword '" + std::string(word) + "'", end - word.size());
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<char>& alphabet_;
  const Limits& limits_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, const std::vector<char>& alphabet,
                         const Limits& limits) {
  if (alphabet.empty()) {
    throw InputError("alphabet must not be empty");
  }
  return FormulaParser(text, alphabet, limits).run();
}

int rank(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Not:
      return rank(f->left);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return std::max(rank(f->left), rank(f->right));
    case Formula::Kind::Finally:
    case Formula::Kind::Previously:
      return rank(f->left) + 1;
    default:
      return 0;
  }
}

bool is_pure_future(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Previously:
      return false;
    case Formula::Kind::Not:
    case Formula::Kind::Finally:
      return is_pure_future(f->left);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_pure_future(f->left) && is_pure_future(f->right);
    default:
      return true;
  }
}

bool is_pure_past(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Finally:
      return false;
    case Formula::Kind::Not:
    case Formula::Kind::Previously:
      return is_pure_past(f->left);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_pure_past(f->left) && is_pure_past(f->right);
    default:
      return true;
  }
}

namespace {

// One boolean per position 0..n+1.
std::vector<bool> satisfaction(const FormulaPtr& f, std::string_view w) {
  const int n = static_cast<int>(w.size());
  std::vector<bool> out(n + 2, false);
  switch (f->kind) {
    case Formula::Kind::True:
      out.assign(n + 2, true);
      break;
    case Formula::Kind::False:
      break;
    case Formula::Kind::Min:
      out[0] = true;
      break;
    case Formula::Kind::Max:
      out[n + 1] = true;
      break;
    case Formula::Kind::Letter:
      for (int i = 1; i <= n; ++i) {
        out[i] = w[i - 1] == f->letter;
      }
      break;
    case Formula::Kind::Not: {
      out = satisfaction(f->left, w);
      out.flip();
      break;
    }
    case Formula::Kind::And: {
      out = satisfaction(f->left, w);
      const std::vector<bool> r = satisfaction(f->right, w);
      for (int i = 0; i <= n + 1; ++i) {
        out[i] = out[i] && r[i];
      }
      break;
    }
    case Formula::Kind::Or: {
      out = satisfaction(f->left, w);
      const std::vector<bool> r = satisfaction(f->right, w);
      for (int i = 0; i <= n + 1; ++i) {
        out[i] = out[i] || r[i];
      }
      break;
    }
    case Formula::Kind::Finally: {
      const std::vector<bool> sub = satisfaction(f->left, w);
      const Dfa& d = f->payload->dfa;
      std::vector<int> letter_of(n + 1);
      for (int i = 1; i <= n; ++i) {
        letter_of[i] = d.letter_index(w[i - 1]);
      }
      for (int i = 0; i <= n + 1; ++i) {
        // Scan j > i; the infix grows by the letter at position j as j
        // moves past it.
        int q = d.initial;
        for (int j = i + 1; j <= n + 1; ++j) {
          if (sub[j] && d.accepting[q]) {
            out[i] = true;
            break;
          }
          if (j <= n) {
            q = d.step(q, letter_of[j]);
          }
        }
      }
      break;
    }
    case Formula::Kind::Previously: {
      const std::vector<bool> sub = satisfaction(f->left, w);
      const Dfa& d = f->payload->dfa;
      std::vector<int> letter_of(n + 1);
      for (int i = 1; i <= n; ++i) {
        letter_of[i] = d.letter_index(w[i - 1]);
      }
      // For each j with sub[j], a forward run marks every i > j whose
      // infix from j is accepted.
      for (int j = 0; j <= n + 1; ++j) {
        if (!sub[j]) {
          continue;
        }
        int q = d.initial;
        for (int i = j + 1; i <= n + 1; ++i) {
          if (d.accepting[q]) {
            out[i] = true;
          }
          if (i <= n) {
            q = d.step(q, letter_of[i]);
          }
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

bool evaluate(const FormulaPtr& f, std::string_view word, int position) {
  const int n = static_cast<int>(word.size());
  if (position < 0 || position > n + 1) {
    throw PositionError(position, word.size());
  }
  return satisfaction(f, word)[position];
}

bool evaluate_naive(const FormulaPtr& f, std::string_view word, int position) {
  const int n = static_cast<int>(word.size());
  if (position < 0 || position > n + 1) {
    throw PositionError(position, word.size());
  }
  switch (f->kind) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Min:
      return position == 0;
    case Formula::Kind::Max:
      return position == n + 1;
    case Formula::Kind::Letter:
      return position >= 1 && position <= n && word[position - 1] == f->letter;
    case Formula::Kind::Not:
      return !evaluate_naive(f->left, word, position);
    case Formula::Kind::And:
      return evaluate_naive(f->left, word, position) && evaluate_naive(f->right, word, position);
    case Formula::Kind::Or:
      return evaluate_naive(f->left, word, position) || evaluate_naive(f->right, word, position);
    case Formula::Kind::Finally: {
      for (int j = position + 1; j <= n + 1; ++j) {
        const std::string_view infix = word.substr(position, j - position - 1);
        if (f->payload->dfa.accepts(infix) && evaluate_naive(f->left, word, j)) {
          return true;
        }
      }
      return false;
    }
    case Formula::Kind::Previously: {
      for (int j = 0; j < position; ++j) {
        const std::string_view infix = word.substr(j, position - j - 1);
        if (f->payload->dfa.accepts(infix) && evaluate_naive(f->left, word, j)) {
          return true;
        }
      }
      return false;
    }
  }
  return false;
}

namespace {

constexpr int kMaxSampleLength = 14;

template <typename Eval>
std::vector<std::string> sample_words(const std::vector<char>& alphabet, int maxlen, Eval&& keep) {
  if (maxlen < 0 || maxlen > kMaxSampleLength) {
    throw InputError("sampling length must be between 0 and " + std::to_string(kMaxSampleLength));
  }
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (int len = 0; len <= maxlen; ++len) {
    for (const std::string& w : layer) {
      if (keep(w)) {
        out.push_back(w);
      }
    }
    if (len == maxlen) {
      break;
    }
    std::vector<std::string> next;
    next.reserve(layer.size() * alphabet.size());
    for (const std::string& w : layer) {
      for (char a : alphabet) {
        next.push_back(w + a);
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<std::string> l_min_sample(const FormulaPtr& f, const std::vector<char>& alphabet,
                                      int maxlen) {
  return sample_words(alphabet, maxlen, [&](const std::string& w) { return evaluate(f, w, 0); });
}

std::vector<std::string> l_max_sample(const FormulaPtr& f, const std::vector<char>& alphabet,
                                      int maxlen) {
  return sample_words(alphabet, maxlen, [&](const std::string& w) {
    return evaluate(f, w, static_cast<int>(w.size()) + 1);
  });
}

FormulaPtr mirror(const FormulaPtr& f, const Limits& limits) {
  switch (f->kind) {
    case Formula::Kind::Min:
      return Formula::max();
    case Formula::Kind::Max:
      return Formula::min();
    case Formula::Kind::Not:
      return Formula::negate(mirror(f->left, limits));
    case Formula::Kind::And:
      return Formula::conj(mirror(f->left, limits), mirror(f->right, limits));
    case Formula::Kind::Or:
      return Formula::disj(mirror(f->left, limits), mirror(f->right, limits));
    case Formula::Kind::Finally:
    case Formula::Kind::Previously: {
      ModalPayload payload{"rev(" + f->payload->source + ")", reverse(f->payload->dfa, limits)};
      auto p = std::make_shared<const ModalPayload>(std::move(payload));
      return f->kind == Formula::Kind::Finally
                 ? Formula::previously(std::move(p), mirror(f->left, limits))
                 : Formula::finally(std::move(p), mirror(f->left, limits));
    }
    default:
      return f;
  }
}

std::string to_string(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True:
      return "true";
    case Formula::Kind::False:
      return "false";
    case Formula::Kind::Min:
      return "min";
    case Formula::Kind::Max:
      return "max";
    case Formula::Kind::Letter:
      return std::string("'") + f->letter + "'";
    case Formula::Kind::Not:
      return "!" + to_string(f->left);
    case Formula::Kind::And:
      return "(" + to_string(f->left) + " & " + to_string(f->right) + ")";
    case Formula::Kind::Or:
      return "(" + to_string(f->left) + " | " + to_string(f->right) + ")";
    case Formula::Kind::Finally:
      return "F[" + f->payload->source + "] " + to_string(f->left);
    case Formula::Kind::Previously:
      return "P[" + f->payload->source + "] " + to_string(f->left);
  }
  return "?";
}

}  // namespace tlc

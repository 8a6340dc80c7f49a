#include "tlc/regex.hpp"

#include <algorithm>
#include <cctype>

#include "tlc/errors.hpp"

namespace tlc {

RegexPtr Regex::empty() { return std::make_shared<Regex>(Regex{Op::Empty}); }
RegexPtr Regex::epsilon() { return std::make_shared<Regex>(Regex{Op::Epsilon}); }

RegexPtr Regex::lit(char a) {
  Regex r{Op::Letter};
  r.letter = a;
  return std::make_shared<Regex>(std::move(r));
}

namespace {
RegexPtr node(Regex::Op op, RegexPtr l, RegexPtr r = nullptr) {
  Regex n{op};
  n.left = std::move(l);
  n.right = std::move(r);
  return std::make_shared<Regex>(std::move(n));
}
}  // namespace

RegexPtr Regex::concat(RegexPtr a, RegexPtr b) { return node(Op::Concat, std::move(a), std::move(b)); }
RegexPtr Regex::alt(RegexPtr a, RegexPtr b) { return node(Op::Union, std::move(a), std::move(b)); }
RegexPtr Regex::inter(RegexPtr a, RegexPtr b) { return node(Op::Inter, std::move(a), std::move(b)); }
RegexPtr Regex::complement(RegexPtr a) { return node(Op::Complement, std::move(a)); }
RegexPtr Regex::star(RegexPtr a) { return node(Op::Star, std::move(a)); }
RegexPtr Regex::plus(RegexPtr a) { return node(Op::Plus, std::move(a)); }

std::vector<char> make_alphabet(std::string_view letters) {
  if (letters.empty()) {
    throw InputError("alphabet must not be empty");
  }
  std::vector<char> out(letters.begin(), letters.end());
  for (char c : out) {
    if (std::isspace(static_cast<unsigned char>(c)) || !std::isprint(static_cast<unsigned char>(c))) {
      throw InputError("alphabet letters must be printable ASCII");
    }
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("alphabet letters must be distinct");
  }
  return out;
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<char>& alphabet)
      : text_(text), alphabet_(alphabet) {}

  RegexPtr run() {
    RegexPtr e = parse_alt();
    skip_ws();
    if (pos_ != text_.size()) {
      throw SyntaxError("unexpected trailing input", pos_);
    }
    return e;
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

  bool starts_atom() {
    if (at_end()) {
      return false;
    }
    const char c = peek();
    return c != '|' && c != '&' && c != '*' && c != '+' && c != ')';
  }

  RegexPtr parse_alt() {
    RegexPtr e = parse_inter();
    while (!at_end() && peek() == '|') {
      ++pos_;
      e = Regex::alt(std::move(e), parse_inter());
    }
    return e;
  }

  RegexPtr parse_inter() {
    RegexPtr e = parse_cat();
    while (!at_end() && peek() == '&') {
      ++pos_;
      e = Regex::inter(std::move(e), parse_cat());
    }
    return e;
  }

  RegexPtr parse_cat() {
    RegexPtr e = parse_rep();
    while (starts_atom()) {
      e = Regex::concat(std::move(e), parse_rep());
    }
    return e;
  }

  RegexPtr parse_rep() {
    RegexPtr e = parse_atom();
    while (!at_end() && (peek() == '*' || peek() == '+')) {
      e = text_[pos_] == '*' ? Regex::star(std::move(e)) : Regex::plus(std::move(e));
      ++pos_;
    }
    return e;
  }

  RegexPtr parse_atom() {
    if (at_end()) {
      throw SyntaxError("expected an atom", pos_);
    }
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return Regex::complement(parse_atom());
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return Regex::epsilon();
      }
      RegexPtr e = parse_alt();
      if (at_end() || peek() != ')') {
        throw SyntaxError("unbalanced '('", open);
      }
      ++pos_;
      return e;
    }
    if (c == '_') {
      ++pos_;
      RegexPtr e = Regex::lit(alphabet_[0]);
      for (std::size_t i = 1; i < alphabet_.size(); ++i) {
        e = Regex::alt(std::move(e), Regex::lit(alphabet_[i]));
      }
      return e;
    }
    if (c == ')' || c == '|' || c == '&' || c == '*' || c == '+') {
      throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }
    if (std::find(alphabet_.begin(), alphabet_.end(), c) == alphabet_.end()) {
      throw UnknownLetterError(c);
    }
    ++pos_;
    return Regex::lit(c);
  }

  std::string_view text_;
  const std::vector<char>& alphabet_;
  std::size_t pos_ = 0;
};

void print(const RegexPtr& re, std::string& out) {
  switch (re->op) {
    case Regex::Op::Empty:
      out += "~(_*)";  // no dedicated literal; complement of everything
      break;
    case Regex::Op::Epsilon:
      out += "()";
      break;
    case Regex::Op::Letter:
      out += re->letter;
      break;
    case Regex::Op::Concat:
      print(re->left, out);
      print(re->right, out);
      break;
    case Regex::Op::Union:
      out += '(';
      print(re->left, out);
      out += '|';
      print(re->right, out);
      out += ')';
      break;
    case Regex::Op::Inter:
      out += '(';
      print(re->left, out);
      out += '&';
      print(re->right, out);
      out += ')';
      break;
    case Regex::Op::Complement:
      out += "~(";
      print(re->left, out);
      out += ')';
      break;
    case Regex::Op::Star:
      out += '(';
      print(re->left, out);
      out += ")*";
      break;
    case Regex::Op::Plus:
      out += '(';
      print(re->left, out);
      out += ")+";
      break;
  }
}

}  // namespace

RegexPtr parse_regex(std::string_view text, const std::vector<char>& alphabet) {
  if (alphabet.empty()) {
    throw InputError("alphabet must not be empty");
  }
  return Parser(text, alphabet).run();
}

std::string to_string(const RegexPtr& re) {
  std::string out;
  print(re, out);
  return out;
}

}  // namespace tlc

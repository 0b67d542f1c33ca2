/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grouptop/presentation.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "grouptop/error.hpp"

namespace grouptop {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_valid_name(const std::string& s) {
  if (s.empty() || !is_name_start(s[0])) return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return true;
}

struct Token {
  enum Kind {
    kName,
    kInt,
    kLAngle,
    kRAngle,
    kBar,
    kComma,
    kStar,
    kCaret,
    kMinus,
    kLParen,
    kRParen,
    kLBracket,
    kRBracket,
    kEquals,
    kAssign,  // :=
    kEnd,
  };
  Kind kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      Token t = next();
      out.push_back(t);
      if (t.kind == Token::kEnd) break;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at " << line_ << ":" << col_ << ": " << msg;
    throw Error(ErrorKind::Parse, os.str());
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token next() {
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Token::kEnd;
      return t;
    }
    char c = src_[pos_];
    if (is_name_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_name_char(src_[pos_])) advance();
      t.kind = Token::kName;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        advance();
      t.kind = Token::kInt;
      t.text = std::string(src_.substr(start, pos_ - start));
      auto [ptr, ec] = std::from_chars(t.text.data(),
                                       t.text.data() + t.text.size(), t.value);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        fail("integer literal out of range: " + t.text);
      return t;
    }
    advance();
    switch (c) {
      case '<': t.kind = Token::kLAngle; return t;
      case '>': t.kind = Token::kRAngle; return t;
      case '|': t.kind = Token::kBar; return t;
      case ',': t.kind = Token::kComma; return t;
      case '*': t.kind = Token::kStar; return t;
      case '^': t.kind = Token::kCaret; return t;
      case '-': t.kind = Token::kMinus; return t;
      case '(': t.kind = Token::kLParen; return t;
      case ')': t.kind = Token::kRParen; return t;
      case '[': t.kind = Token::kLBracket; return t;
      case ']': t.kind = Token::kRBracket; return t;
      case '=': t.kind = Token::kEquals; return t;
      case ':':
        if (pos_ < src_.size() && src_[pos_] == '=') {
          advance();
          t.kind = Token::kAssign;
          return t;
        }
        fail("stray ':'");
      default: {
        std::ostringstream os;
        os << "unexpected character '" << c << "'";
        fail(os.str());
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

// Recursive-descent parser over the token stream. Word expressions are
// parsed against a generator-name environment; presentations introduce
// their own environment from the generator list.
class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

  std::vector<NamedPresentation> parse_file() {
    std::vector<NamedPresentation> out;
    std::set<std::string> seen;
    if (peek().kind == Token::kLAngle) {
      out.push_back({"", parse_presentation_body()});
      expect(Token::kEnd, "end of input");
      return out;
    }
    while (peek().kind != Token::kEnd) {
      Token name = expect(Token::kName, "block name");
      if (!seen.insert(name.text).second)
        fail(name, "duplicate block name '" + name.text + "'");
      expect(Token::kAssign, "':='");
      out.push_back({name.text, parse_presentation_body()});
    }
    if (out.empty()) fail(peek(), "no presentation found");
    return out;
  }

  // Parses a standalone word over a fixed environment.
  Word parse_single_word(const Presentation& p) {
    env_.clear();
    for (std::size_t i = 0; i < p.generator_count(); ++i)
      env_[p.generator_names()[i]] = static_cast<std::uint32_t>(i);
    Word w = parse_word_expr();
    expect(Token::kEnd, "end of word");
    return w;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  Token take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at " << t.line << ":" << t.col << ": " << msg;
    throw Error(ErrorKind::Parse, os.str());
  }

  Token expect(Token::Kind kind, const std::string& what) {
    Token t = take();
    if (t.kind != kind) fail(t, "expected " + what);
    return t;
  }

  Presentation parse_presentation_body() {
    expect(Token::kLAngle, "'<'");
    std::vector<std::string> names;
    env_.clear();
    if (peek().kind == Token::kName) {
      for (;;) {
        Token t = expect(Token::kName, "generator name");
        if (env_.count(t.text))
          fail(t, "duplicate generator name '" + t.text + "'");
        env_[t.text] = static_cast<std::uint32_t>(names.size());
        names.push_back(t.text);
        if (peek().kind != Token::kComma) break;
        take();
      }
    }
    expect(Token::kBar, "'|'");
    std::vector<Word> relators;
    if (peek().kind != Token::kRAngle) {
      for (;;) {
        relators.push_back(parse_relator());
        if (peek().kind != Token::kComma) break;
        take();
      }
    }
    expect(Token::kRAngle, "'>'");
    return Presentation(std::move(names), std::move(relators));
  }

  Word parse_relator() {
    Word lhs = parse_word_expr();
    if (peek().kind == Token::kEquals) {
      take();
      Word rhs = parse_word_expr();
      if (peek().kind == Token::kEquals)
        fail(peek(), "chained '=' in relator");
      return lhs * rhs.inverse();
    }
    return lhs;
  }

  static bool starts_factor(const Token& t) {
    return t.kind == Token::kName || t.kind == Token::kLParen ||
           t.kind == Token::kLBracket ||
           (t.kind == Token::kInt && t.value == 1);
  }

  Word parse_word_expr() {
    Word w = parse_term();
    for (;;) {
      if (peek().kind == Token::kStar) {
        take();
        w = w * parse_term();
      } else if (starts_factor(peek())) {
        w = w * parse_term();
      } else {
        return w;
      }
    }
  }

  Word parse_term() {
    Word w = parse_factor();
    while (peek().kind == Token::kCaret) {
      take();
      if (peek().kind == Token::kMinus || peek().kind == Token::kInt) {
        bool neg = false;
        if (peek().kind == Token::kMinus) {
          take();
          neg = true;
        }
        Token e = expect(Token::kInt, "exponent");
        w = w.pow(neg ? -e.value : e.value);
      } else if (starts_factor(peek())) {
        Word b = parse_factor();
        w = w.conjugated_by(b);
      } else {
        fail(peek(), "expected exponent or conjugating word after '^'");
      }
    }
    return w;
  }

  Word parse_factor() {
    Token t = take();
    switch (t.kind) {
      case Token::kName: {
        auto it = env_.find(t.text);
        if (it == env_.end())
          fail(t, "unknown generator '" + t.text + "'");
        return Word::generator(it->second);
      }
      case Token::kInt:
        if (t.value == 1) return Word();
        fail(t, "integer literal in word position");
      case Token::kLParen: {
        Word w = parse_word_expr();
        expect(Token::kRParen, "')'");
        return w;
      }
      case Token::kLBracket: {
        Word a = parse_word_expr();
        expect(Token::kComma, "','");
        Word b = parse_word_expr();
        expect(Token::kRBracket, "']'");
        return Word::commutator(a, b);
      }
      default:
        fail(t, "expected a word");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::uint32_t> env_;
};

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const std::string& n : names_) {
    if (!is_valid_name(n))
      throw Error(ErrorKind::Domain, "invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw Error(ErrorKind::Domain, "duplicate generator name '" + n + "'");
  }
  for (const Word& r : relators_)
    if (r.max_generator() >= static_cast<std::int64_t>(names_.size()))
      throw Error(ErrorKind::Domain,
                  "relator mentions a generator outside the presentation");
}

std::optional<std::uint32_t> Presentation::generator_index(
    std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::string Presentation::word_text(const Word& w) const {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (s.generator >= names_.size())
      throw Error(ErrorKind::Domain,
                  "word mentions a generator outside the presentation");
    if (!first) os << "*";
    os << names_[s.generator];
    if (s.exponent != 1) os << "^" << s.exponent;
    first = false;
  }
  return os.str();
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) os << ", ";
    os << names_[i];
  }
  os << (names_.empty() ? "|" : " |");
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    os << (i ? ", " : " ") << word_text(relators_[i]);
  }
  os << " >";
  return os.str();
}

Word Presentation::parse_word(std::string_view text) const {
  Parser p(text);
  return p.parse_single_word(*this);
}

Presentation parse_presentation(std::string_view text, std::string_view block) {
  std::vector<NamedPresentation> all = parse_presentation_file(text);
  if (block.empty()) {
    if (all.size() != 1)
      throw Error(ErrorKind::Parse,
                  "input contains several named presentations; pick one");
    return all.front().presentation;
  }
  for (const NamedPresentation& np : all)
    if (np.name == block) return np.presentation;
  throw Error(ErrorKind::Parse,
              "no presentation named '" + std::string(block) + "'");
}

std::vector<NamedPresentation> parse_presentation_file(std::string_view text) {
  Parser p(text);
  return p.parse_file();
}

IntMatrix abelianized_relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const Syllable& s : p.relators()[i].syllables())
      m.at(i, s.generator) += s.exponent;
  return m;
}

Presentation quotient_presentation(const Presentation& p,
                                   const std::vector<Word>& killers) {
  std::vector<Word> relators = p.relators();
  for (const Word& w : killers) {
    if (w.max_generator() >= static_cast<std::int64_t>(p.generator_count()))
      throw Error(ErrorKind::Domain,
                  "kill word mentions a generator outside the presentation");
    if (!w.is_identity()) relators.push_back(w);
  }
  return Presentation(p.generator_names(), std::move(relators));
}

namespace {

Word shift_word(const Word& w, std::uint32_t offset) {
  std::vector<Syllable> out = w.syllables();
  for (Syllable& s : out) s.generator += offset;
  return Word::from_syllables(out);
}

}  // namespace

Presentation amalgamated_product(const Presentation& p1,
                                 const Presentation& p2,
                                 const Presentation& a,
                                 const std::vector<Word>& images1,
                                 const std::vector<Word>& images2) {
  if (images1.size() != a.generator_count() ||
      images2.size() != a.generator_count())
    throw Error(ErrorKind::Domain,
                "one image word required per amalgam generator");
  for (const Word& w : images1)
    if (w.max_generator() >= static_cast<std::int64_t>(p1.generator_count()))
      throw Error(ErrorKind::Domain,
                  "image word mentions a generator outside the first factor");
  for (const Word& w : images2)
    if (w.max_generator() >= static_cast<std::int64_t>(p2.generator_count()))
      throw Error(ErrorKind::Domain,
                  "image word mentions a generator outside the second factor");

  std::vector<std::string> names = p1.generator_names();
  std::set<std::string> taken(names.begin(), names.end());
  for (const std::string& n : p2.generator_names()) taken.insert(n);
  std::set<std::string> assigned(p1.generator_names().begin(),
                                 p1.generator_names().end());
  for (const std::string& n : p2.generator_names()) {
    std::string candidate = n;
    for (int suffix = 2;
         assigned.count(candidate) ||
         (candidate != n && taken.count(candidate));
         ++suffix)
      candidate = n + "_" + std::to_string(suffix);
    assigned.insert(candidate);
    names.push_back(candidate);
  }

  std::uint32_t offset = static_cast<std::uint32_t>(p1.generator_count());
  std::vector<Word> relators = p1.relators();
  for (const Word& r : p2.relators()) relators.push_back(shift_word(r, offset));
  for (std::size_t g = 0; g < a.generator_count(); ++g) {
    Word glue = images1[g] * shift_word(images2[g], offset).inverse();
    if (!glue.is_identity()) relators.push_back(glue);
  }
  return Presentation(std::move(names), std::move(relators));
}

Presentation free_product(const Presentation& p1, const Presentation& p2) {
  return amalgamated_product(p1, p2, Presentation(), {}, {});
}

}  // namespace grouptop

#pragma once

// Text format for words and presentations.
//
//   presentation := '<' names? '|' relations? '>'
//   names        := ident (',' ident)*
//   relations    := relation (',' relation)*
//   relation     := word ('=' word)?
//   word         := factor*
//   factor       := atom ('^' exponent)?
//   atom         := generator | '(' word ')' | '[' word ',' word ']' | '1'
//   exponent     := integer | '{' integer '}'
//
// Generators inside words are matched greedily against the name table, so
// both "t a t^-1" and "tat^-1" parse. The unicode brackets U+27E8/U+27E9 are
// accepted in place of '<' and '>'. '#' starts a comment running to the end
// of the line.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "largeness/errors.hpp"
#include "largeness/presentation.hpp"
#include "largeness/word.hpp"

namespace largeness {

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
          ++pos_;
        } else {
          break;
        }
      }
    }
    if (start == pos_) fail("expected a generator name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Exp integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    Exp value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      pos_ = start;
      fail("expected an integer");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -value : value;
  }

  /// Longest name in `names` matching at the cursor, or -1.
  Gen match_generator(const std::vector<std::string>& names) {
    skip_space();
    Gen best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string& n = names[i];
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best = static_cast<Gen>(i);
        best_len = n.size();
      }
    }
    if (best >= 0) pos_ += best_len;
    return best;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Word parse_word_expr(Lexer& lx, const std::vector<std::string>& names);

inline Exp parse_exponent(Lexer& lx) {
  if (!lx.accept("^")) return 1;
  if (lx.accept("{")) {
    const Exp e = lx.integer();
    lx.expect("}");
    return e;
  }
  return lx.integer();
}

inline Word parse_factor(Lexer& lx, const std::vector<std::string>& names, bool& got) {
  got = true;
  Word atom;
  if (lx.accept("(")) {
    atom = parse_word_expr(lx, names);
    lx.expect(")");
  } else if (lx.accept("[")) {
    const Word u = parse_word_expr(lx, names);
    lx.expect(",");
    const Word v = parse_word_expr(lx, names);
    lx.expect("]");
    atom = commutator(u, v);
  } else if (lx.accept("1")) {
    atom = Word{};
  } else {
    const Gen g = lx.match_generator(names);
    if (g < 0) {
      got = false;
      return {};
    }
    atom = Word::letter(g);
  }
  return atom.pow(parse_exponent(lx));
}

inline Word parse_word_expr(Lexer& lx, const std::vector<std::string>& names) {
  Word w;
  for (;;) {
    lx.skip_space();
    if (lx.peek(")") || lx.peek("]") || lx.peek(",") || lx.peek("|") || lx.peek(">") ||
        lx.peek("=") || lx.peek("\xE2\x9F\xA9") || lx.at_end())
      return w;
    bool got = false;
    const Word f = parse_factor(lx, names, got);
    if (!got) lx.fail("unknown generator or unexpected character");
    w.append(f);
  }
}

/// relation := word ('=' word)?, stored as u v^-1.
inline Word parse_relation(Lexer& lx, const std::vector<std::string>& names) {
  Word lhs = parse_word_expr(lx, names);
  if (lx.accept("=")) {
    const Word rhs = parse_word_expr(lx, names);
    return lhs * rhs.inverse();
  }
  return lhs;
}

}  // namespace detail

/// Parses a word over the given generator names. Throws ParseError.
inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  detail::Lexer lx(text);
  Word w = detail::parse_relation(lx, names);
  if (!lx.at_end()) lx.fail("trailing input");
  return w;
}

inline Presentation parse_presentation(std::string_view text) {
  detail::Lexer lx(text);
  if (!lx.accept("<") && !lx.accept("\xE2\x9F\xA8")) lx.fail("expected '<'");
  std::vector<std::string> names;
  if (!lx.peek("|")) {
    do {
      std::string n = lx.identifier();
      for (const auto& existing : names) {
        if (existing == n) lx.fail("duplicate generator '" + n + "'");
      }
      names.push_back(std::move(n));
    } while (lx.accept(","));
  }
  std::vector<Word> relators;
  if (lx.accept("|")) {
    if (!lx.peek(">") && !lx.peek("\xE2\x9F\xA9")) {
      do {
        relators.push_back(detail::parse_relation(lx, names));
      } while (lx.accept(","));
    }
  }
  if (!lx.accept(">") && !lx.accept("\xE2\x9F\xA9")) lx.fail("expected '>'");
  if (!lx.at_end()) lx.fail("trailing input");
  return Presentation(std::move(names), std::move(relators));
}

// ---------------------------------------------------------------------------
// Formatting

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Run& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += names.at(static_cast<std::size_t>(r.gen));
    if (r.exp != 1) out += "^" + std::to_string(r.exp);
  }
  return out;
}

inline std::string format_presentation(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.names().size(); ++i) {
    if (i) out += ", ";
    out += p.names()[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators()[i], p.names());
  }
  out += " >";
  return out;
}

}  // namespace largeness

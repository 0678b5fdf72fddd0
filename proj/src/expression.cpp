#include "slicereg/expression.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "slicereg/error.hpp"

namespace slicereg {

namespace {

enum class Tok { Number, Q, I, J, K, Plus, Minus, Star, Caret, LParen, RParen, Super, End };

struct Token {
  Tok kind;
  std::size_t pos;
  double number{0.0};
  int exponent{0};  // for Super
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "expression: " + what + " at offset " + std::to_string(pos));
}

// Superscript digit encoded at s[i..], or -1.  Sets len to the UTF-8 length.
int superscript_digit(std::string_view s, std::size_t i, std::size_t& len) {
  const auto at = [&](std::size_t k) { return i + k < s.size() ? static_cast<unsigned char>(s[i + k]) : 0u; };
  if (at(0) == 0xC2) {
    len = 2;
    if (at(1) == 0xB9) return 1;
    if (at(1) == 0xB2) return 2;
    if (at(1) == 0xB3) return 3;
  }
  if (at(0) == 0xE2 && at(1) == 0x81) {
    len = 3;
    if (at(2) == 0xB0) return 0;
    if (at(2) >= 0xB4 && at(2) <= 0xB9) return static_cast<int>(at(2) - 0xB0);
  }
  return -1;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c) || c == '.') {
      double value = 0.0;
      const auto [end, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
      if (ec != std::errc{}) fail(i, "malformed number");
      out.push_back({Tok::Number, i, value});
      i = static_cast<std::size_t>(end - s.data());
      continue;
    }
    std::size_t len = 0;
    if (superscript_digit(s, i, len) >= 0) {
      const std::size_t start = i;
      int exponent = 0;
      int d;
      while (i < s.size() && (d = superscript_digit(s, i, len)) >= 0) {
        exponent = 10 * exponent + d;
        i += len;
      }
      out.push_back({Tok::Super, start, 0.0, exponent});
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      out.push_back({Tok::Minus, i});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "\xC2\xB7" || s.substr(i, 2) == "\xC3\x97") {  // middle dot, multiplication sign
      out.push_back({Tok::Star, i});
      i += 2;
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x8B\x86") {  // star operator
      out.push_back({Tok::Star, i});
      i += 3;
      continue;
    }
    Tok kind;
    switch (c) {
      case 'q': kind = Tok::Q; break;
      case 'i': kind = Tok::I; break;
      case 'j': kind = Tok::J; break;
      case 'k': kind = Tok::K; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: fail(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back({kind, i});
    ++i;
  }
  out.push_back({Tok::End, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  RegularSeries parse() {
    RegularSeries f = expr();
    if (peek().kind != Tok::End) fail(peek().pos, "unexpected token");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  static bool starts_atom(Tok t) {
    return t == Tok::Number || t == Tok::Q || t == Tok::I || t == Tok::J || t == Tok::K || t == Tok::LParen;
  }

  RegularSeries expr() {
    RegularSeries f = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      const RegularSeries g = term();
      f = minus ? f - g : f + g;
    }
    return f;
  }

  RegularSeries term() {
    RegularSeries f = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        f = star_mul(f, factor());
      } else if (starts_atom(peek().kind)) {
        f = star_mul(f, factor());
      } else {
        return f;
      }
    }
  }

  RegularSeries factor() {
    RegularSeries base = atom();
    for (;;) {
      int exponent;
      if (peek().kind == Tok::Caret) {
        next();
        const Token& t = next();
        if (t.kind != Tok::Number || t.number != static_cast<int>(t.number) || t.number < 0)
          fail(t.pos, "exponent must be a nonnegative integer");
        exponent = static_cast<int>(t.number);
      } else if (peek().kind == Tok::Super) {
        exponent = next().exponent;
      } else {
        return base;
      }
      if (exponent > 64) fail(peek().pos, "exponent too large");
      RegularSeries power = RegularSeries::constant(kOne);
      for (int n = 0; n < exponent; ++n) power = star_mul(power, base);
      base = power;
    }
  }

  RegularSeries atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: return RegularSeries::constant(Quaternion{t.number});
      case Tok::Q: return RegularSeries::identity();
      case Tok::I: return RegularSeries::constant(kI);
      case Tok::J: return RegularSeries::constant(kJ);
      case Tok::K: return RegularSeries::constant(kK);
      case Tok::Minus: return -factor();
      case Tok::Plus: return factor();
      case Tok::LParen: {
        RegularSeries f = expr();
        if (next().kind != Tok::RParen) fail(t.pos, "unbalanced parenthesis");
        return f;
      }
      case Tok::End: fail(t.pos, "unexpected end of input");
      default: fail(t.pos, "unexpected token");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_{0};
};

}  // namespace

RegularSeries parse_polynomial(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace slicereg

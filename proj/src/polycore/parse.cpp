#include "adjtor/polycore/parse.hpp"

#include <algorithm>
#include <cctype>

namespace adjtor {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Variables& vars) : s_(text), vars_(vars) {}

  ExactPoly run() {
    ExactPoly p = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  ExactPoly expr() {
    ExactPoly acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ExactPoly term() {
    ExactPoly acc = signed_factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= signed_factor();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  ExactPoly signed_factor() {
    if (peek('-')) {
      ++pos_;
      return -signed_factor();
    }
    if (peek('+')) {
      ++pos_;
      return signed_factor();
    }
    return power();
  }

  int integer_exponent() {
    skip_space();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    bool paren = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      paren = true;
      ++pos_;
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == '-') {
        negative = !negative;
        ++pos_;
      }
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const int k = std::stoi(s_.substr(start, pos_ - start));
    if (paren) {
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')' after exponent");
      ++pos_;
    }
    return negative ? -k : k;
  }

  ExactPoly power() {
    ExactPoly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    const int k = integer_exponent();
    if (k >= 0) return pow(base, static_cast<unsigned>(k));
    if (base.size() != 1) fail("negative power of a non-monomial");
    const auto& [e, c] = *base.terms().begin();
    Exponent ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] * k;
    Rational inv = Rational(1) / c;
    Rational coeff = 1;
    for (int i = 0; i < -k; ++i) coeff *= inv;
    return ExactPoly::monomial(vars_, ne, coeff);
  }

  ExactPoly atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExactPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (const auto& v : vars_)
        if (v == name) return ExactPoly::variable(vars_, name);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExactPoly number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits = s_.substr(start, pos_ - start);
    Integer denominator = 1;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      const std::size_t frac_start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string frac = s_.substr(frac_start, pos_ - frac_start);
      digits += frac;
      for (std::size_t i = 0; i < frac.size(); ++i) denominator *= 10;
    }
    if (digits.empty()) fail("malformed number");
    // A leading 0 would make the mpz string constructor read octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Rational value(Integer(digits), denominator);
    return ExactPoly::constant(vars_, value);
  }

  const std::string& s_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactPoly parse_polynomial(const std::string& text, const Variables& vars) {
  return Parser(text, vars).run();
}

}  // namespace adjtor

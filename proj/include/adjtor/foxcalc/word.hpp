#pragma once

#include <compare>
#include <string>
#include <vector>

namespace adjtor {

struct Letter {
  int generator;  // 1-based
  int exponent;   // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in the generators g1, g2, ...
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);  // reduces

  static Word generator(int index, int power = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  /// Highest generator index used (0 for the identity).
  int max_generator() const;
  /// Sum of all exponents.
  int exponent_sum() const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v) { return *this = *this * v; }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses whitespace-separated tokens `g1`, `g2^-1`, `g1^3`; `1` or an empty
/// string is the identity.
Word parse_word(const std::string& text);

std::string to_string(const Word& w);

}  // namespace adjtor

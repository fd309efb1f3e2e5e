#include "adjtor/foxcalc/word.hpp"

#include "adjtor/numeric/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace adjtor {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (l.exponent != 1 && l.exponent != -1) throw StructuralError("letter exponent must be +1 or -1");
  if (l.generator < 1) throw StructuralError("generator indices are 1-based");
  if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& l : letters) push_reduced(letters_, l);
}

Word Word::generator(int index, int power) {
  std::vector<Letter> ls(static_cast<std::size_t>(std::abs(power)), Letter{index, power > 0 ? 1 : -1});
  return Word(ls);
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

int Word::exponent_sum() const {
  int s = 0;
  for (const auto& l : letters_) s += l.exponent;
  return s;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  for (const auto& l : v.letters_) push_reduced(w.letters_, l);
  return w;
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'g') throw ParseError("bad word token '" + tok + "'");
    const std::size_t caret = tok.find('^');
    const std::string index_text = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    int power = 1;
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(index_text, &used);
      if (used != index_text.size()) throw ParseError("");
      if (caret != std::string::npos) {
        const std::string p = tok.substr(caret + 1);
        power = std::stoi(p, &used);
        if (used != p.size()) throw ParseError("");
      }
    } catch (const std::exception&) {
      throw ParseError("bad word token '" + tok + "'");
    }
    if (index < 1) throw ParseError("generator index must be positive in '" + tok + "'");
    w *= Word::generator(index, power);
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (const auto& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(l.generator);
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

}  // namespace adjtor

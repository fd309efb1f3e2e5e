#pragma once

#include "adjtor/foxcalc/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace adjtor {

/// Integer combination of words, an element of Z[F_n].
class GroupRingElement {
 public:
  using Terms = std::map<Word, long>;

  GroupRingElement() = default;
  GroupRingElement(const Word& w, long coeff = 1) { add(w, coeff); }  // NOLINT(implicit)

  static GroupRingElement one() { return GroupRingElement(Word()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, long coeff);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Fox derivative d w / d g_j.
GroupRingElement fox_derivative(const Word& w, int j);

std::string to_string(const GroupRingElement& e);

}  // namespace adjtor

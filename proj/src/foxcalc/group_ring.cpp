#include "adjtor/foxcalc/group_ring.hpp"

#include "adjtor/numeric/errors.hpp"

namespace adjtor {

void GroupRingElement::add(const Word& w, long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) out.add(u * v, cu * cv);
  return out;
}

GroupRingElement fox_derivative(const Word& w, int j) {
  if (j < 1) throw StructuralError("Fox derivative: generator index must be positive");
  GroupRingElement out;
  Word prefix;
  for (const auto& l : w.letters()) {
    const Word letter({l});
    if (l.generator == j) {
      if (l.exponent == 1) {
        out.add(prefix, 1);
      } else {
        out.add(prefix * letter, -1);
      }
    }
    prefix *= letter;
  }
  return out;
}

std::string to_string(const GroupRingElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : e.terms()) {
    const long mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += std::to_string(mag) + "*";
    s += w.is_identity() ? "1" : "(" + to_string(w) + ")";
  }
  return s;
}

}  // namespace adjtor

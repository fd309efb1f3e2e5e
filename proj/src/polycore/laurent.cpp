#include "adjtor/polycore/laurent.hpp"

#include <iomanip>

namespace adjtor {

PowerTable::PowerTable(const Complex& x, int lo, int hi) : lo_(std::min(lo, 0)) {
  const int top = std::max(hi, 0);
  powers_.assign(static_cast<std::size_t>(top - lo_ + 1), Complex(0));
  powers_[static_cast<std::size_t>(-lo_)] = Complex(1);
  for (int k = 1; k <= top; ++k)
    powers_[static_cast<std::size_t>(k - lo_)] = powers_[static_cast<std::size_t>(k - 1 - lo_)] * x;
  if (lo_ < 0) {
    if (x.is_zero()) throw PoleError("negative power of zero in evaluation");
    const Complex inv = Complex(1) / x;
    for (int k = -1; k >= lo_; --k)
      powers_[static_cast<std::size_t>(k - lo_)] = powers_[static_cast<std::size_t>(k + 1 - lo_)] * inv;
  }
}

std::optional<ExactPoly> exact_divide(const ExactPoly& a, const ExactPoly& b) {
  a.check_compatible(b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  ExactPoly q(a.variables());
  if (a.is_zero()) return q;

  // A quotient's exponent box is the difference of the boxes, which bounds the
  // loop below and rejects non-divisible inputs early.
  const auto box_a = exponent_box(a);
  const auto box_b = exponent_box(b);
  const std::size_t n = a.nvars();
  std::vector<std::pair<int, int>> bound(n);
  for (std::size_t k = 0; k < n; ++k) {
    bound[k] = {box_a[k].first - box_b[k].first, box_a[k].second - box_b[k].second};
    if (bound[k].first > bound[k].second) return std::nullopt;
  }

  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  ExactPoly rem = a;
  Exponent e(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = re[k] - lead_e[k];
      if (e[k] < bound[k].first || e[k] > bound[k].second) return std::nullopt;
    }
    const Rational c = rc / lead_c;
    q.add_term(e, c);
    for (const auto& [be, bc] : b.terms()) {
      Exponent t(n);
      for (std::size_t k = 0; k < n; ++k) t[k] = be[k] + e[k];
      rem.add_term(t, Rational(-c * bc));
    }
  }
  return q;
}

ExactPoly reduce_modulo(const ExactPoly& g, const ExactPoly& f, const std::string& var) {
  g.check_compatible(f);
  const auto f_parts = collect(f, var);
  const int d = f_parts.rbegin()->first;
  const ExactPoly& lead = f_parts.rbegin()->second;
  if (f_parts.begin()->first < 0) throw DomainError("reduce_modulo: divisor has negative powers of " + var);
  if (lead.size() != 1) throw DomainError("reduce_modulo: leading coefficient in " + var + " is not a monomial");
  if (g.is_zero()) return g;
  if (degree_range(g, var).first < 0) throw DomainError("reduce_modulo: dividend has negative powers of " + var);

  const std::size_t v = g.var_index(var);
  const Exponent& lead_e = lead.terms().begin()->first;  // over the other variables
  const Rational& lead_c = lead.terms().begin()->second;

  ExactPoly r = g;
  while (!r.is_zero()) {
    const int top = degree_range(r, var).second;
    if (top < d) break;
    // Subtract (top coefficient / lead) * var^(top-d) * f.
    ExactPoly correction(g.variables());
    for (const auto& [e, c] : r.terms()) {
      if (e[v] != top) continue;
      Exponent shift_e(e.size());
      std::size_t j = 0;
      for (std::size_t k = 0; k < e.size(); ++k)
        shift_e[k] = (k == v) ? top - d : e[k] - lead_e[j++];
      correction.add_term(shift_e, Rational(c / lead_c));
    }
    r -= correction * f;
  }
  return r;
}

namespace {

std::string monomial_string(const Variables& vars, const Exponent& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[k];
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

template <class C, class Fmt>
std::string join_terms(const LaurentPoly<C>& p, Fmt fmt) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest terms first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const std::string mono = monomial_string(p.variables(), it->first);
    std::string coeff = fmt(it->second);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const ExactPoly& p) {
  return join_terms(p, [](const Rational& c) { return c.str(); });
}

std::string to_string(const NumericPoly& p, int digits) {
  return join_terms(p, [digits](const Complex& c) {
    if (c.imag() == 0) {
      std::ostringstream os;
      os << std::setprecision(digits) << c.real();
      return os.str();
    }
    return "(" + format_complex(c, digits) + ")";
  });
}

}  // namespace adjtor

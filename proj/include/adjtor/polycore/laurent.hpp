#pragma once

// Multivariate Laurent polynomials over an exact (Rational) or floating
// (Complex) coefficient ring.
//
// Terms live in a std::map keyed by exponent vector, so iteration order is the
// lexicographic order on Z^n.  That order is compatible with multiplication,
// which is what exact division relies on.

#include "adjtor/numeric/complex.hpp"
#include "adjtor/numeric/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace adjtor {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Variables = std::vector<std::string>;
using Exponent = std::vector<int>;

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Complex& c) { return c.is_zero(); }

inline Complex to_complex(const Rational& c) { return Complex(Real(c)); }
inline Complex to_complex(const Complex& c) { return c; }

template <class C>
class LaurentPoly {
 public:
  using Coefficient = C;
  using Terms = std::map<Exponent, C>;

  LaurentPoly() = default;
  explicit LaurentPoly(Variables vars) : vars_(std::move(vars)) {}
  LaurentPoly(Variables vars, const Terms& terms) : vars_(std::move(vars)) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly constant(Variables vars, const C& c) {
    LaurentPoly p(std::move(vars));
    p.add_term(Exponent(p.nvars(), 0), c);
    return p;
  }

  static LaurentPoly monomial(Variables vars, Exponent e, const C& c = C(1)) {
    LaurentPoly p(std::move(vars));
    p.add_term(std::move(e), c);
    return p;
  }

  static LaurentPoly variable(Variables vars, const std::string& name, int power = 1) {
    LaurentPoly p(std::move(vars));
    Exponent e(p.nvars(), 0);
    e[p.var_index(name)] = power;
    p.add_term(std::move(e), C(1));
    return p;
  }

  const Variables& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int k) { return k == 0; }));
  }

  /// Constant term (zero when absent).
  C constant_term() const {
    auto it = terms_.find(Exponent(nvars(), 0));
    return it == terms_.end() ? C(0) : it->second;
  }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  std::size_t var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw StructuralError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  bool has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }

  /// Adds c·x^e, pruning exact zeros.
  void add_term(const Exponent& e, const C& c) {
    if (e.size() != vars_.size()) throw StructuralError("exponent length does not match variable count");
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }

  LaurentPoly& operator*=(const C& s) {
    if (coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const C& s) { return a *= s; }
  friend LaurentPoly operator*(const C& s, LaurentPoly a) { return a *= s; }

  LaurentPoly operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(-c));
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.vars_);
    Exponent e(a.nvars());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  void check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw StructuralError("Laurent polynomials have different variable lists");
  }

 private:
  Variables vars_;
  Terms terms_;
};

using ExactPoly = LaurentPoly<Rational>;
using NumericPoly = LaurentPoly<Complex>;

template <class C>
LaurentPoly<C> pow(const LaurentPoly<C>& p, unsigned n) {
  LaurentPoly<C> result = LaurentPoly<C>::constant(p.variables(), C(1));
  LaurentPoly<C> base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

/// Multiplies by var^k.
template <class C>
LaurentPoly<C> shift(const LaurentPoly<C>& p, const std::string& var, int k) {
  const std::size_t v = p.var_index(var);
  LaurentPoly<C> r(p.variables());
  for (const auto& [key, c] : p.terms()) {
    Exponent e = key;
    e[v] += k;
    r.add_term(e, c);
  }
  return r;
}

/// Multiplies by the monomial x^e.
template <class C>
LaurentPoly<C> shift(const LaurentPoly<C>& p, const Exponent& by) {
  LaurentPoly<C> r(p.variables());
  for (const auto& [key, c] : p.terms()) {
    Exponent e = key;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += by.at(k);
    r.add_term(e, c);
  }
  return r;
}

template <class C>
LaurentPoly<C> derivative(const LaurentPoly<C>& p, const std::string& var) {
  const std::size_t v = p.var_index(var);
  LaurentPoly<C> r(p.variables());
  for (const auto& [key, c] : p.terms()) {
    if (key[v] == 0) continue;
    Exponent e = key;
    C factor(e[v]);
    e[v] -= 1;
    r.add_term(e, c * factor);
  }
  return r;
}

/// [min, max] exponent of var over the support. The zero polynomial is a
/// domain error.
template <class C>
std::pair<int, int> degree_range(const LaurentPoly<C>& p, const std::string& var) {
  if (p.is_zero()) throw DomainError("degree of the zero polynomial");
  const std::size_t v = p.var_index(var);
  int lo = p.terms().begin()->first[v];
  int hi = lo;
  for (const auto& [e, c] : p.terms()) {
    lo = std::min(lo, e[v]);
    hi = std::max(hi, e[v]);
  }
  return {lo, hi};
}

/// Per-variable [min, max] exponents.
template <class C>
std::vector<std::pair<int, int>> exponent_box(const LaurentPoly<C>& p) {
  if (p.is_zero()) throw DomainError("exponent box of the zero polynomial");
  std::vector<std::pair<int, int>> box;
  for (int k : p.terms().begin()->first) box.emplace_back(k, k);
  for (const auto& [e, c] : p.terms())
    for (std::size_t k = 0; k < e.size(); ++k) {
      box[k].first = std::min(box[k].first, e[k]);
      box[k].second = std::max(box[k].second, e[k]);
    }
  return box;
}

inline Variables without(const Variables& vars, const std::string& var) {
  Variables out;
  for (const auto& v : vars)
    if (v != var) out.push_back(v);
  return out;
}

/// Groups terms by the power of var; coefficients are polynomials in the
/// remaining variables (same order, var removed).
template <class C>
std::map<int, LaurentPoly<C>> collect(const LaurentPoly<C>& p, const std::string& var) {
  const std::size_t v = p.var_index(var);
  const Variables rest = without(p.variables(), var);
  std::map<int, LaurentPoly<C>> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent r;
    r.reserve(e.size() - 1);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (k != v) r.push_back(e[k]);
    auto it = out.try_emplace(e[v], LaurentPoly<C>(rest)).first;
    it->second.add_term(r, c);
  }
  return out;
}

/// Inverse of collect: sum of coeff_k · var^k, with var inserted at position
/// `index` of the variable list.
template <class C>
LaurentPoly<C> uncollect(const std::map<int, LaurentPoly<C>>& parts, const Variables& vars,
                         const std::string& var) {
  LaurentPoly<C> r(vars);
  const std::size_t v = r.var_index(var);
  for (const auto& [k, coeff] : parts) {
    if (coeff.variables() != without(vars, var)) throw StructuralError("uncollect: variable mismatch");
    for (const auto& [e, c] : coeff.terms()) {
      Exponent full;
      full.reserve(vars.size());
      std::size_t j = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) full.push_back(i == v ? k : e[j++]);
      r.add_term(full, c);
    }
  }
  return r;
}

/// Re-expresses p over a superset (or permutation) of its variables.
template <class C>
LaurentPoly<C> embed(const LaurentPoly<C>& p, const Variables& vars) {
  std::vector<std::size_t> where;
  LaurentPoly<C> r(vars);
  for (const auto& v : p.variables()) where.push_back(r.var_index(v));
  for (const auto& [e, c] : p.terms()) {
    Exponent full(vars.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) full[where[k]] = e[k];
    r.add_term(full, c);
  }
  return r;
}

/// Drops variables that do not occur; throws if a dropped variable occurs.
template <class C>
LaurentPoly<C> restrict_to(const LaurentPoly<C>& p, const Variables& vars) {
  std::vector<std::size_t> keep;
  for (const auto& v : vars) keep.push_back(p.var_index(v));
  LaurentPoly<C> r(vars);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0 && std::find(keep.begin(), keep.end(), k) == keep.end())
        throw StructuralError("restrict_to: dropped variable occurs in the polynomial");
    Exponent small;
    for (std::size_t k : keep) small.push_back(e[k]);
    r.add_term(small, c);
  }
  return r;
}

inline NumericPoly to_numeric(const ExactPoly& p) {
  NumericPoly r(p.variables());
  for (const auto& [e, c] : p.terms()) r.add_term(e, to_complex(c));
  return r;
}

inline NumericPoly to_numeric(const NumericPoly& p) { return p; }

/// Powers x^k for k in [lo, hi], cached per variable for fast evaluation.
class PowerTable {
 public:
  PowerTable(const Complex& x, int lo, int hi);
  const Complex& operator()(int k) const { return powers_.at(static_cast<std::size_t>(k - lo_)); }

 private:
  int lo_;
  std::vector<Complex> powers_;
};

template <class C>
Complex evaluate(const LaurentPoly<C>& p, const std::vector<Complex>& point) {
  if (point.size() != p.nvars()) throw StructuralError("evaluate: point dimension mismatch");
  if (p.is_zero()) return Complex(0);
  const auto box = exponent_box(p);
  std::vector<PowerTable> tables;
  tables.reserve(point.size());
  for (std::size_t k = 0; k < point.size(); ++k) tables.emplace_back(point[k], box[k].first, box[k].second);
  Complex sum(0);
  for (const auto& [e, c] : p.terms()) {
    Complex term = to_complex(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) term *= tables[k](e[k]);
    sum += term;
  }
  return sum;
}

/// Sum of |c_a|·|x^a| at the point: the natural scale for residuals.
template <class C>
Real evaluation_scale(const LaurentPoly<C>& p, const std::vector<Complex>& point) {
  if (p.is_zero()) return Real(0);
  std::vector<Real> mods;
  for (const auto& x : point) mods.push_back(abs(x));
  Real sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Real t = abs(to_complex(c));
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) t *= boost::multiprecision::pow(mods[k], e[k]);
    sum += t;
  }
  return sum;
}

/// Substitutes a numeric value for var; result is over the remaining variables.
template <class C>
NumericPoly substitute(const LaurentPoly<C>& p, const std::string& var, const Complex& value) {
  NumericPoly out(without(p.variables(), var));
  for (const auto& [k, coeff] : collect(p, var)) {
    NumericPoly part = to_numeric(coeff);
    part *= pow(value, k);
    out += part;
  }
  return out;
}

/// Exact quotient a / b when b divides a in the Laurent ring; nullopt otherwise.
std::optional<ExactPoly> exact_divide(const ExactPoly& a, const ExactPoly& b);

/// Remainder of g modulo f in var.  The leading coefficient of f in var must be
/// a single monomial (a unit of the Laurent ring), and g must be polynomial in
/// var.
ExactPoly reduce_modulo(const ExactPoly& g, const ExactPoly& f, const std::string& var);

/// Dense coefficients of a univariate polynomial after clearing the lowest
/// power: returns (lowest exponent, [c_0, c_1, ...]).
template <class C>
std::pair<int, std::vector<C>> dense_coefficients(const LaurentPoly<C>& p) {
  if (p.nvars() != 1) throw StructuralError("dense_coefficients needs a univariate polynomial");
  if (p.is_zero()) throw DomainError("dense_coefficients of the zero polynomial");
  const auto [lo, hi] = degree_range(p, p.variables()[0]);
  std::vector<C> dense(static_cast<std::size_t>(hi - lo + 1), C(0));
  for (const auto& [e, c] : p.terms()) dense[static_cast<std::size_t>(e[0] - lo)] = c;
  return {lo, dense};
}

template <class C>
LaurentPoly<C> from_dense(const std::string& var, const std::vector<C>& dense, int lowest = 0) {
  LaurentPoly<C> p(Variables{var});
  for (std::size_t k = 0; k < dense.size(); ++k) p.add_term({static_cast<int>(k) + lowest}, dense[k]);
  return p;
}

std::string to_string(const ExactPoly& p);
std::string to_string(const NumericPoly& p, int digits = 8);

}  // namespace adjtor

#include "adjtor/polycore/resultant.hpp"

#include "adjtor/numeric/matrix.hpp"

namespace adjtor {

namespace {

// Coefficients of p in var, lowest power first, after shifting the lowest
// power to zero.
template <class C>
std::vector<LaurentPoly<C>> dense_in(const LaurentPoly<C>& p, const std::string& var, int& shift) {
  auto parts = collect(p, var);
  const int lo = parts.begin()->first;
  const int hi = parts.rbegin()->first;
  shift = -lo;
  std::vector<LaurentPoly<C>> out(static_cast<std::size_t>(hi - lo + 1),
                                  LaurentPoly<C>(without(p.variables(), var)));
  for (auto& [k, c] : parts) out[static_cast<std::size_t>(k - lo)] = std::move(c);
  return out;
}

template <class C>
std::vector<std::vector<LaurentPoly<C>>> sylvester(const std::vector<LaurentPoly<C>>& f,
                                                   const std::vector<LaurentPoly<C>>& g,
                                                   const Variables& rest) {
  const std::size_t df = f.size() - 1;
  const std::size_t dg = g.size() - 1;
  const std::size_t n = df + dg;
  std::vector<std::vector<LaurentPoly<C>>> s(n, std::vector<LaurentPoly<C>>(n, LaurentPoly<C>(rest)));
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t k = 0; k <= df; ++k) s[i][i + k] = f[df - k];
  for (std::size_t i = 0; i < df; ++i)
    for (std::size_t k = 0; k <= dg; ++k) s[dg + i][i + k] = g[dg - k];
  return s;
}

}  // namespace

ExactPoly bareiss_determinant(std::vector<std::vector<ExactPoly>> a, const Variables& vars) {
  const std::size_t n = a.size();
  if (n == 0) return ExactPoly::constant(vars, Rational(1));
  bool negate = false;
  ExactPoly prev = ExactPoly::constant(vars, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return ExactPoly(vars);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ExactPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw Error("Bareiss elimination: inexact division (internal error)");
        a[i][j] = std::move(*q);
      }
      a[i][k] = ExactPoly(vars);
    }
    prev = a[k][k];
  }
  ExactPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

ExactResultant resultant(const ExactPoly& f, const ExactPoly& g, const std::string& var) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero()) {
    ExactResultant r;
    r.value = ExactPoly(without(f.variables(), var));
    r.warnings.push_back("an input is the zero polynomial");
    return r;
  }
  ExactResultant out;
  const auto fd = dense_in(f, var, out.f_shift);
  const auto gd = dense_in(g, var, out.g_shift);
  const Variables rest = without(f.variables(), var);
  const std::size_t df = fd.size() - 1;
  const std::size_t dg = gd.size() - 1;
  if (df == 0 && dg == 0) throw DomainError("resultant: both inputs are constant in " + var);
  if (out.f_shift != 0 || out.g_shift != 0)
    out.warnings.push_back("cleared monomial factors in " + var + ": f*" + var + "^" +
                           std::to_string(out.f_shift) + ", g*" + var + "^" + std::to_string(out.g_shift));
  if (!fd.back().is_constant() && !gd.back().is_constant())
    out.warnings.push_back("both leading coefficients in " + var +
                           " are non-constant; the resultant also vanishes where they vanish together");
  if (df == 0) {
    out.value = pow(fd[0], static_cast<unsigned>(dg));
    return out;
  }
  if (dg == 0) {
    out.value = pow(gd[0], static_cast<unsigned>(df));
    return out;
  }
  out.value = bareiss_determinant(sylvester(fd, gd, rest), rest);
  return out;
}

NumericResultant numeric_resultant(const NumericPoly& f, const NumericPoly& g, const std::string& var,
                                   const Real& trim_tol) {
  f.check_compatible(g);
  if (f.nvars() != 2) throw StructuralError("numeric_resultant needs bivariate inputs");
  if (f.is_zero() || g.is_zero()) throw DomainError("numeric_resultant of the zero polynomial");
  const Variables rest = without(f.variables(), var);
  const std::string& other = rest[0];

  NumericResultant out;
  auto fd = dense_in(f, var, out.f_shift);
  auto gd = dense_in(g, var, out.g_shift);
  const std::size_t df = fd.size() - 1;
  const std::size_t dg = gd.size() - 1;
  if (df == 0 && dg == 0) throw DomainError("resultant: both inputs are constant in " + var);

  // Shift each input to nonnegative powers of the other variable, then bound
  // the resultant degree by the Sylvester row structure.
  auto normalize = [&](std::vector<NumericPoly>& d) {
    int lo = 0;
    int hi = 0;
    bool first = true;
    for (const auto& c : d) {
      if (c.is_zero()) continue;
      const auto [a, b] = degree_range(c, other);
      lo = first ? a : std::min(lo, a);
      hi = first ? b : std::max(hi, b);
      first = false;
    }
    for (auto& c : d) c = shift(c, other, -lo);
    return std::pair{lo, hi - lo};
  };
  const auto [f_lo, f_deg] = normalize(fd);
  const auto [g_lo, g_deg] = normalize(gd);
  const std::size_t bound = dg * static_cast<std::size_t>(f_deg) + df * static_cast<std::size_t>(g_deg);
  const std::size_t npts = bound + 1;

  auto eval_dense = [&](const std::vector<NumericPoly>& d, const Complex& w) {
    std::vector<Complex> v;
    v.reserve(d.size());
    for (const auto& c : d) v.push_back(evaluate(c, {w}));
    return v;
  };

  std::vector<Complex> values(npts);
  std::vector<Complex> nodes(npts);
  for (std::size_t k = 0; k < npts; ++k) {
    nodes[k] = polar(Real(1), 2 * pi() * Real(static_cast<long>(k)) / Real(static_cast<long>(npts)));
    const auto fv = eval_dense(fd, nodes[k]);
    const auto gv = eval_dense(gd, nodes[k]);
    if (df == 0) {
      values[k] = pow(fv[0], static_cast<long>(dg));
      continue;
    }
    if (dg == 0) {
      values[k] = pow(gv[0], static_cast<long>(df));
      continue;
    }
    const std::size_t n = df + dg;
    ComplexMatrix s(n, n, Complex(0));
    for (std::size_t i = 0; i < dg; ++i)
      for (std::size_t j = 0; j <= df; ++j) s(i, i + j) = fv[df - j];
    for (std::size_t i = 0; i < df; ++i)
      for (std::size_t j = 0; j <= dg; ++j) s(dg + i, i + j) = gv[dg - j];
    values[k] = determinant(s);
  }

  // Inverse DFT.
  std::vector<Complex> coeffs(npts, Complex(0));
  Real scale = 0;
  for (std::size_t j = 0; j < npts; ++j) {
    Complex sum(0);
    for (std::size_t k = 0; k < npts; ++k) sum += values[k] * conj(nodes[(k * j) % npts]);
    coeffs[j] = sum / Complex(Real(static_cast<long>(npts)));
    const Real a = abs(coeffs[j]);
    if (a > scale) scale = a;
  }
  NumericPoly r(rest);
  for (std::size_t j = 0; j < npts; ++j)
    if (abs(coeffs[j]) > trim_tol * scale) r.add_term({static_cast<int>(j)}, coeffs[j]);
  // Undo the shifts: R(f*w^-lo, g*w^-lo) = w^(-lo_f*dg - lo_g*df) R(f, g).
  out.value = shift(r, other, f_lo * static_cast<int>(dg) + g_lo * static_cast<int>(df));
  return out;
}

}  // namespace adjtor

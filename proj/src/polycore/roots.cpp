#include "adjtor/polycore/roots.hpp"

#include "adjtor/kernels/kernels.hpp"
#include "adjtor/numeric/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

namespace adjtor {

namespace {

using cd = std::complex<double>;

constexpr int kMaxDoubleSweeps = 200;
constexpr int kMaxPreciseSweeps = 200;

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|c_k|).
std::vector<cd> initial_guesses(const std::vector<double>& logmod) {
  const std::size_t n = logmod.size() - 1;
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    if (!std::isfinite(logmod[k])) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double lhs = (logmod[b] - logmod[a]) * static_cast<double>(k - a);
      const double rhs = (logmod[k] - logmod[a]) * static_cast<double>(b - a);
      if (lhs <= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<cd> z;
  z.reserve(n);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t i = hull[h];
    const std::size_t j = hull[h + 1];
    const double count = static_cast<double>(j - i);
    const double radius = std::exp((logmod[i] - logmod[j]) / count);
    for (std::size_t t = 0; t < j - i; ++t) {
      const double angle = two_pi * static_cast<double>(t) / count + two_pi * static_cast<double>(i) / static_cast<double>(n) + 0.4;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

struct DoubleStage {
  std::vector<double> cr, ci, rr, ri, ar, rar;  // forward, reversed, |forward|, |reversed|
};

// Aberth iteration in double precision with the batched kernels.  Roots with
// |z| > 1 are evaluated through the reversed polynomial to avoid overflow.
std::vector<cd> aberth_double(const std::vector<cd>& coeffs, std::vector<cd> z, bool& ok) {
  const std::size_t n = coeffs.size() - 1;
  const auto& kern = kernels::active_kernels();
  DoubleStage s;
  for (std::size_t k = 0; k <= n; ++k) {
    s.cr.push_back(coeffs[k].real());
    s.ci.push_back(coeffs[k].imag());
    s.rr.push_back(coeffs[n - k].real());
    s.ri.push_back(coeffs[n - k].imag());
    s.ar.push_back(std::abs(coeffs[k]));
    s.rar.push_back(std::abs(coeffs[n - k]));
  }
  const std::vector<double> zeros(n + 1, 0.0);
  const double eps = std::numeric_limits<double>::epsilon();

  std::vector<bool> done(n, false);
  std::vector<double> zr(n), zi(n), sr(n), si(n);
  std::vector<double> xr(n), xi(n), pr(n), pi(n), dr(n), di(n), br(n), bi(n), bdr(n), bdi(n);
  ok = false;
  for (int sweep = 0; sweep < kMaxDoubleSweeps; ++sweep) {
    for (std::size_t i = 0; i < n; ++i) {
      zr[i] = z[i].real();
      zi[i] = z[i].imag();
    }
    kern.aberth_sums(zr.data(), zi.data(), n, sr.data(), si.data());

    // Evaluate inner points with p, outer points with the reversal at 1/z.
    std::vector<std::size_t> inner, outer;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      (std::abs(z[i]) <= 1.0 ? inner : outer).push_back(i);
    }
    if (inner.empty() && outer.empty()) {
      ok = true;
      break;
    }
    auto run = [&](const std::vector<std::size_t>& idx, bool reversed) {
      const std::size_t m = idx.size();
      if (m == 0) return;
      std::vector<double> mod(m), zero(m, 0.0);
      for (std::size_t t = 0; t < m; ++t) {
        cd w = reversed ? 1.0 / z[idx[t]] : z[idx[t]];
        xr[t] = w.real();
        xi[t] = w.imag();
        mod[t] = std::abs(w);
      }
      const auto& c_re = reversed ? s.rr : s.cr;
      const auto& c_im = reversed ? s.ri : s.ci;
      const auto& c_abs = reversed ? s.rar : s.ar;
      kern.horner(c_re.data(), c_im.data(), n + 1, xr.data(), xi.data(), m, pr.data(), pi.data(), dr.data(), di.data());
      kern.horner(c_abs.data(), zeros.data(), n + 1, mod.data(), zero.data(), m, br.data(), bi.data(), bdr.data(), bdi.data());
      for (std::size_t t = 0; t < m; ++t) {
        const std::size_t i = idx[t];
        const cd p(pr[t], pi[t]);
        const cd dp(dr[t], di[t]);
        if (std::abs(p) <= 4.0 * eps * static_cast<double>(n) * br[t]) {
          done[i] = true;
          continue;
        }
        cd ratio;
        if (!reversed) {
          ratio = p / dp;
        } else {
          const cd w(xr[t], xi[t]);
          ratio = z[i] / (static_cast<double>(n) - w * dp / p);
        }
        const cd sum(sr[i], si[i]);
        const cd step = ratio / (1.0 - ratio * sum);
        z[i] -= step;
        if (std::abs(step) <= 4.0 * eps * std::abs(z[i])) done[i] = true;
      }
    };
    run(inner, false);
    run(outer, true);
  }
  for (const auto& r : z)
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) ok = false;
  return z;
}

struct Eval {
  Complex p, dp;
  Real scale;  // sum |c_k| |z|^k
};

Eval horner(const std::vector<Complex>& c, const std::vector<Real>& cabs, const Complex& z) {
  const Real mod = abs(z);
  Eval e{c.back(), Complex(0), cabs.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    e.dp = e.dp * z + e.p;
    e.p = e.p * z + c[k];
    e.scale = e.scale * mod + cabs[k];
  }
  return e;
}

}  // namespace

RootResult polynomial_roots(std::vector<Complex> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw DomainError("roots of the zero polynomial");
  std::size_t low = 0;
  while (coeffs[low].is_zero()) ++low;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
  RootResult result;
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return result;

  const unsigned outer_bits = working_bits();
  const Real cluster_tol = scaled_tolerance(1e-8);
  const Real residual_tol = scaled_tolerance(1e-9);

  std::vector<Complex> refined;
  {
    PrecisionScope inner(2 * outer_bits);
    std::vector<Complex> c;
    std::vector<Real> cabs;
    for (const auto& x : coeffs) {
      c.push_back(with_precision(x, 2 * outer_bits));
      cabs.push_back(abs(c.back()));
    }
    const Real eps = working_epsilon();

    std::vector<Complex> z;
    if (n == 1) {
      z.push_back(-c[0] / c[1]);
    } else {
      // Double-precision start, scaled by the largest coefficient.
      Real biggest = *std::max_element(cabs.begin(), cabs.end());
      std::vector<double> logmod;
      std::vector<cd> cdbl;
      for (std::size_t k = 0; k <= n; ++k) {
        logmod.push_back(cabs[k] == 0 ? -std::numeric_limits<double>::infinity()
                                      : boost::multiprecision::log(cabs[k]).convert_to<double>());
        cdbl.push_back((c[k] / Complex(biggest)).to_std());
      }
      const auto guesses = initial_guesses(logmod);
      bool usable = std::abs(cdbl.front()) > 0 && std::abs(cdbl.back()) > 0;
      for (const auto& g : guesses)
        if (!std::isfinite(g.real()) || !std::isfinite(g.imag()) || g == cd(0)) usable = false;
      std::vector<cd> start = guesses;
      bool converged = false;
      if (usable) {
        auto attempt = aberth_double(cdbl, guesses, converged);
        bool finite = std::all_of(attempt.begin(), attempt.end(), [](const cd& r) {
          return std::isfinite(r.real()) && std::isfinite(r.imag()) && r != cd(0);
        });
        if (finite) start = attempt;
      }
      for (const auto& g : start) z.emplace_back(Real(g.real()), Real(g.imag()));
      if (z.size() != n) throw Error("root finder: initial guess count mismatch (internal error)");

      // Gauss-Seidel Aberth sweeps at doubled precision.
      std::vector<bool> done(n, false);
      int sweep = 0;
      for (; sweep < kMaxPreciseSweeps; ++sweep) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
          if (done[i]) continue;
          all_done = false;
          const Eval e = horner(c, cabs, z[i]);
          if (abs(e.p) <= 4 * eps * Real(static_cast<long>(n)) * e.scale) {
            done[i] = true;
            continue;
          }
          Complex sum(0);
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Complex d = z[i] - z[j];
            if (d.is_zero()) continue;
            sum += Complex(1) / d;
          }
          Complex step;
          if (e.dp.is_zero()) {
            step = Complex(eps * (1 + abs(z[i])) * 16, eps * 7);
          } else {
            const Complex ratio = e.p / e.dp;
            step = ratio / (Complex(1) - ratio * sum);
          }
          z[i] -= step;
          if (abs(step) <= 4 * eps * abs(z[i])) done[i] = true;
        }
        if (all_done) break;
      }
      result.iterations = sweep;
    }
    for (auto& r : z) refined.push_back(std::move(r));

    // Cluster roots closer than the tolerance of the caller's precision.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (abs(refined[i] - refined[j]) < cluster_tol * (1 + abs(refined[i]))) parent[find(i)] = find(j);

    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    Real worst = 0;
    for (const auto& g : groups) {
      if (g.empty()) continue;
      Complex center(0);
      for (std::size_t i : g) center += refined[i];
      center /= Complex(Real(static_cast<long>(g.size())));
      if (g.size() == 1) {
        // Newton polish of an isolated root.
        for (int it = 0; it < 3; ++it) {
          const Eval e = horner(c, cabs, center);
          if (e.dp.is_zero()) break;
          center -= e.p / e.dp;
        }
      }
      const Eval e = horner(c, cabs, center);
      const Real ratio = e.scale == 0 ? Real(0) : Real(abs(e.p) / e.scale);
      if (ratio > worst) worst = ratio;
      result.clusters.push_back({with_precision(center, outer_bits), static_cast<int>(g.size())});
    }
    result.worst_residual = worst.convert_to<double>();
    if (worst > residual_tol)
      throw SolverError("root finder did not reach the residual tolerance", result.worst_residual);
  }

  std::sort(result.clusters.begin(), result.clusters.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  for (const auto& cl : result.clusters)
    for (int k = 0; k < cl.multiplicity; ++k) result.roots.push_back(cl.center);
  return result;
}

RootResult univariate_roots(const NumericPoly& p) {
  auto [lowest, dense] = dense_coefficients(p);
  (void)lowest;
  return polynomial_roots(std::move(dense));
}

}  // namespace adjtor

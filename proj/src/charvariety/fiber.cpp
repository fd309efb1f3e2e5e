#include "adjtor/charvariety/fiber.hpp"

#include "adjtor/polycore/resultant.hpp"
#include "adjtor/polycore/roots.hpp"

#include <algorithm>
#include <sstream>

namespace adjtor {

namespace {

const Variables& ymx_vars() {
  static const Variables v{"y", "m", "x"};
  return v;
}

// L^k mod f, reducing after every multiplication to keep degrees small.
ExactPoly reduced_power(const ExactPoly& L, const ExactPoly& f, unsigned k) {
  ExactPoly out = ExactPoly::constant(f.variables(), Rational(1));
  for (unsigned i = 0; i < k; ++i) out = reduce_modulo(out * L, f, "y");
  return out;
}

struct Residual {
  Complex f, h;
  Real rel;
};

int compare_real(const Real& a, const Real& b) {
  const Real tol = Real(1e-9) * (1 + std::max(abs(a), abs(b)));
  if (a < b - tol) return -1;
  if (a > b + tol) return 1;
  return 0;
}

}  // namespace

Complex pick_x(const Complex& z) {
  const Complex disc = z * z - Complex(4);
  if (abs(disc) <= scaled_tolerance(1e-12) * (1 + abs(z * z)))
    throw NonGenericError("z = +-2: the trace fiber meets the parabolic locus");
  const Complex s = sqrt(disc);
  const Complex a = (z + s) / Complex(2);
  const Complex b = (z - s) / Complex(2);
  const Real tie = Real(1e-12);
  const Real da = abs(a) - 1;
  if (abs(da) > tie) return da > 0 ? a : b;
  // |x| = 1: take the root in the upper half plane (arg in [0, pi)).
  const Real aa = arg(a);
  return (aa >= 0 && aa < pi()) ? a : b;
}

int d_gamma(int p, int /*q*/) { return (p % 2 == 0) ? 1 : 2; }

void sort_canonical(std::vector<CharacterPoint>& points) {
  std::stable_sort(points.begin(), points.end(), [](const CharacterPoint& a, const CharacterPoint& b) {
    if (a.component != b.component) return a.component < b.component;
    for (int c : {compare_real(a.m.real(), b.m.real()), compare_real(a.m.imag(), b.m.imag()),
                  compare_real(a.y.real(), b.y.real()), compare_real(a.y.imag(), b.y.imag())})
      if (c != 0) return c < 0;
    return false;
  });
}

FiberSolver::FiberSolver(const KnotPreset& preset) : preset_(preset) {}

const ExactPoly& FiberSolver::eliminant(std::size_t component, int p, int q) {
  const auto key = std::make_tuple(component, p, q);
  if (auto it = eliminants_.find(key); it != eliminants_.end()) return it->second;
  if (component >= preset_.components.size()) throw StructuralError("eliminant: component out of range");
  if (p == 0 && q == 0) throw DomainError("slope (0, 0) is not a curve");
  const PresetComponent& comp = preset_.components[component];
  const ExactPoly f = embed(comp.riley, ymx_vars());
  const ExactPoly L = reduce_modulo(embed(comp.longitude, ymx_vars()), f, "y");
  const ExactPoly mp = ExactPoly::variable(ymx_vars(), "m", p);
  const ExactPoly x = ExactPoly::variable(ymx_vars(), "x");
  const ExactPoly lhs = reduce_modulo(mp * reduced_power(L, f, static_cast<unsigned>(std::max(q, 0))), f, "y");
  const ExactPoly rhs = x * reduced_power(L, f, static_cast<unsigned>(std::max(-q, 0)));
  const ExactResultant r = resultant(f, lhs - rhs, "y");
  return eliminants_.emplace(key, r.value).first->second;
}

const FiberSolver::Derivatives& FiberSolver::derivatives(std::size_t component) {
  // Numeric copies depend on the working precision, so they are rebuilt when it changes.
  auto it = derivs_.find(component);
  if (it != derivs_.end() && it->second.first == working_bits()) return it->second.second;
  const PresetComponent& comp = preset_.components[component];
  Derivatives d{to_numeric(comp.riley),
                to_numeric(derivative(comp.riley, "y")),
                to_numeric(derivative(comp.riley, "m")),
                to_numeric(comp.longitude),
                to_numeric(derivative(comp.longitude, "y")),
                to_numeric(derivative(comp.longitude, "m"))};
  derivs_[component] = {working_bits(), std::move(d)};
  return derivs_[component].second;
}

std::vector<CharacterPoint> FiberSolver::solve_component(std::size_t component, int p, int q, const Complex& x,
                                                         std::vector<std::string>* warnings) {
  const ExactPoly& R = eliminant(component, p, q);
  const Derivatives& d = derivatives(component);
  const Complex pc(static_cast<long>(p));
  const Complex qc(static_cast<long>(q));
  const unsigned bits = working_bits();

  const auto residual = [&](const Complex& y, const Complex& m) {
    const std::vector<Complex> at{y, m};
    const Complex fv = evaluate(d.f, at);
    const Complex Lv = evaluate(d.L, at);
    const Complex g = pow(m, p) * pow(Lv, q);
    const Complex h = g - x;
    // Rounding in L is amplified by q in m^p L^q, so its evaluation scale
    // enters the scale of h.
    const Real l_scale = Lv.is_zero() ? Real(1) : evaluation_scale(d.L, at) / abs(Lv);
    const Real rel = std::max(abs(fv) / std::max(Real(1e-300), evaluation_scale(d.f, at)),
                              abs(h) / (abs(x) + abs(g) * (1 + std::abs(q) * l_scale)));
    return Residual{fv, h, rel};
  };

  const NumericPoly in_m = substitute(R, "x", x);
  if (in_m.is_zero()) throw NonGenericError("the eliminant vanishes identically at this x");
  const RootResult mroots = univariate_roots(in_m);

  std::vector<CharacterPoint> found;
  const Real step_tol = Real(1e-14) * boost::multiprecision::pow(Real(2), 53 - static_cast<int>(bits));
  const Real accept_tol = scaled_tolerance(1e-10);
  int failed = 0;

  for (const auto& mc : mroots.clusters) {
    const RootResult yroots = univariate_roots(substitute(d.f, "m", mc.center));
    for (const auto& yc : yroots.clusters) {
      Complex y = yc.center;
      Complex m = mc.center;
      Residual res = residual(y, m);
      bool converged = false;
      Real last_correction = -1;  // size of the undamped Newton step at the final iterate
      for (int iter = 0; iter < 100; ++iter) {
        const std::vector<Complex> at{y, m};
        const Complex Lv = evaluate(d.L, at);
        if (Lv.is_zero() || m.is_zero()) break;
        const Complex g = pow(m, p) * pow(Lv, q);
        const Complex a11 = evaluate(d.f_y, at);
        const Complex a12 = evaluate(d.f_m, at);
        const Complex a21 = qc * g * evaluate(d.L_y, at) / Lv;
        const Complex a22 = pc * g / m + qc * g * evaluate(d.L_m, at) / Lv;
        const Complex det = a11 * a22 - a12 * a21;
        if (det.is_zero()) break;
        const Complex dy = (a22 * res.f - a12 * res.h) / det;
        const Complex dm = (a11 * res.h - a21 * res.f) / det;
        last_correction = (abs(dy) + abs(dm)) / (1 + abs(y) + abs(m));
        Real lambda = 1;
        Complex ny, nm;
        Residual nres;
        bool improved = false;
        for (int half = 0; half < 30 && !improved; ++half) {
          ny = y - Complex(lambda) * dy;
          nm = m - Complex(lambda) * dm;
          nres = residual(ny, nm);
          improved = nres.rel < res.rel;
          lambda /= 2;
        }
        // No descent at all: the residual is at its rounding floor.
        if (!improved) break;
        const Real step = abs(ny - y) + abs(nm - m);
        y = ny;
        m = nm;
        res = nres;
        if (step < step_tol * (1 + abs(y) + abs(m))) {
          converged = true;
          break;
        }
      }
      // A small residual alone is not enough near singular Jacobians: the
      // undamped correction must be negligible too.  Ill-conditioned roots
      // (large longitude coefficients at small |m|) keep a visible correction
      // at the rounding floor, so a residual within 1e3 ulps also qualifies
      // provided the correction stays below 1e-6.
      const bool floor_residual = res.rel <= Real(1e3) * working_epsilon() && last_correction <= Real(1e-6);
      const bool accepted = res.rel <= accept_tol && last_correction >= 0 &&
                            (last_correction <= scaled_tolerance(1e-9) || floor_residual);
      if (!accepted) {
        // Candidates from spurious eliminant roots or other y-branches land
        // here; only a converged iterate that still fails is worth reporting.
        if (converged) ++failed;
        continue;
      }
      if (y.is_zero() || abs(y) <= Real(1e-12)) continue;
      if (abs(m - Complex(1)) <= Real(1e-8) || abs(m + Complex(1)) <= Real(1e-8)) {
        if (warnings) warnings->push_back("excluded a boundary-parabolic point with m = +-1");
        continue;
      }
      const Complex l = evaluate(d.L, {y, m});
      bool duplicate = false;
      for (const auto& other : found) {
        const Real size = 1 + abs(y) + abs(m);
        if (abs(other.y - y) + abs(other.m - m) <= Real(1e-8) * size) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate)
        found.push_back({static_cast<int>(component), y, m, l, res.rel.convert_to<double>()});
    }
  }
  if (failed > 0 && warnings) {
    std::ostringstream ss;
    ss << "component " << component << ": " << failed << " converged candidate(s) failed the acceptance test";
    warnings->push_back(ss.str());
  }
  sort_canonical(found);
  return found;
}

FiberResult FiberSolver::solve(int p, int q, const Complex& x) {
  FiberResult out;
  for (std::size_t c = 0; c < preset_.components.size(); ++c) {
    auto pts = solve_component(c, p, q, x, &out.warnings);
    out.points.insert(out.points.end(), pts.begin(), pts.end());
  }
  sort_canonical(out.points);
  return out;
}

}  // namespace adjtor

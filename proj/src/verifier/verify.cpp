#include "adjtor/verifier/verify.hpp"

#include "adjtor/torsion/fox_torsion.hpp"
#include "adjtor/torsion/slope.hpp"

#include <chrono>
#include <numeric>

namespace adjtor {

namespace {

// Runs one pipeline stage, prefixing errors with its name.
template <class F>
auto staged(const std::string& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const NonGenericError& e) {
    throw NonGenericError(stage + ": " + e.what() + " (non-generic input; perturb z)");
  } catch (const SolverError& e) {
    throw SolverError(stage + ": " + e.what(), e.worst_residual());
  } catch (const PoleError& e) {
    throw PoleError(stage + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(stage + ": " + e.what());
  }
}

}  // namespace

std::size_t VerificationReport::point_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.points.size();
  return n;
}

PointResult point_torsion(const KnotPreset& preset, const CharacterPoint& pt, int p, int q, const Complex& x) {
  const PresetComponent& comp = preset.components.at(static_cast<std::size_t>(pt.component));
  const Representation rho = two_bridge_representation(pt.y, pt.m);
  const TorsionValue tor_lambda = torsion_at_longitude(preset.presentation, rho);
  const SlopePoint sp{pt.y, pt.m, pt.l, x};
  const Complex factor = preset.slope_route == SlopeRoute::apoly && comp.apoly
                             ? slope_factor_apoly(*comp.apoly, p, q, sp)
                             : slope_factor_bordered(comp.riley, comp.longitude, p, q, sp);
  return {pt, tor_lambda.value, factor, factor * tor_lambda.value};
}

VerificationReport verify_vanishing(FiberSolver& solver, const VerifyRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  PrecisionScope scope(req.precision_bits);
  if (std::gcd(req.p, req.q) != 1) throw DomainError("slope (p, q) must have gcd(p, q) = 1");
  const KnotPreset& preset = solver.preset();

  VerificationReport report;
  report.preset = preset.name;
  report.p = req.p;
  report.q = req.q;
  report.precision_bits = req.precision_bits;
  report.tolerance = req.tol;
  if (req.x) {
    report.x = with_precision(*req.x, req.precision_bits);
    if (req.z) report.z = with_precision(*req.z, req.precision_bits);
  } else if (req.z) {
    report.z = with_precision(*req.z, req.precision_bits);
    report.x = staged("trace fiber", [&] { return pick_x(*report.z); });
  } else {
    throw DomainError("verify: either z or x is required");
  }

  const FiberResult fiber = staged("fiber solve", [&] { return solver.solve(req.p, req.q, report.x); });
  report.warnings = fiber.warnings;

  for (std::size_t c = 0; c < preset.components.size(); ++c) {
    ComponentResult comp;
    comp.index = static_cast<int>(c);
    for (const auto& pt : fiber.points) {
      if (pt.component != comp.index) continue;
      comp.points.push_back(staged("torsion", [&] { return point_torsion(preset, pt, req.p, req.q, report.x); }));
    }
    report.components.push_back(std::move(comp));
  }

  // Raw component sums, then the sign assignment minimizing the total.
  std::vector<Complex> raw;
  Real max_inverse = 0;
  for (const auto& comp : report.components) {
    Complex s(0);
    for (const auto& pr : comp.points) {
      const Complex inv = Complex(1) / pr.torsion;
      s += inv;
      max_inverse = std::max(max_inverse, abs(inv));
    }
    raw.push_back(s);
  }
  const std::size_t k = raw.size();
  const std::size_t assignments = k == 0 ? 1 : (std::size_t{1} << (k - 1));
  std::size_t best = 0;
  Real best_abs = -1;
  for (std::size_t mask = 0; mask < assignments; ++mask) {
    Complex total(0);
    for (std::size_t c = 0; c < k; ++c) {
      const bool flip = c > 0 && ((mask >> (c - 1)) & 1u);
      total += flip ? -raw[c] : raw[c];
    }
    report.sign_pairings.push_back(total);
    if (best_abs < 0 || abs(total) < best_abs) {
      best_abs = abs(total);
      best = mask;
    }
  }
  report.total_sum = Complex(0);
  for (std::size_t c = 0; c < k; ++c) {
    auto& comp = report.components[c];
    comp.sign = (c > 0 && ((best >> (c - 1)) & 1u)) ? -1 : 1;
    if (comp.sign < 0)
      for (auto& pr : comp.points) pr.torsion = -pr.torsion;
    comp.inverse_sum = comp.sign < 0 ? -raw[c] : raw[c];
    report.total_sum += comp.inverse_sum;
  }
  report.vanishing_metric = max_inverse == 0 ? 0.0 : (abs(report.total_sum) / max_inverse).convert_to<double>();

  bool magnitudes_match = true;
  if (k > 1) {
    // With cancellation between components the sums must agree in size.
    Real lo = abs(raw[0]);
    Real hi = lo;
    for (const auto& s : raw) {
      lo = std::min(lo, abs(s));
      hi = std::max(hi, abs(s));
    }
    if (k == 2 && hi > 0) magnitudes_match = (hi - lo) <= Real(req.tol) * max_inverse;
  }
  report.verdict = (report.vanishing_metric <= req.tol && magnitudes_match) ? Verdict::pass : Verdict::fail;
  if (!magnitudes_match) report.warnings.push_back("component inverse sums differ in magnitude");

  if (!req.genera.empty()) {
    std::vector<IndexValue> values;
    for (int g : req.genera) values.push_back(twisted_index(report, g));
    report.index_values = std::move(values);
  }
  if (req.khovanskii) report.khovanskii = khovanskii_certify(solver, req.p, req.q, report.x);

  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_vanishing(const std::string& knot, const VerifyRequest& request) {
  FiberSolver solver(load_preset(knot));
  return verify_vanishing(solver, request);
}

IndexValue twisted_index(const VerificationReport& report, int genus) {
  if (genus < 0) throw DomainError("twisted_index: genus must be nonnegative");
  const Complex d(static_cast<long>(d_gamma(report.p, report.q)));
  IndexValue out;
  out.genus = genus;
  out.value = Complex(0);
  Real largest = 0;
  for (const auto& comp : report.components)
    for (const auto& pr : comp.points) {
      const Complex term = pow(d * pr.torsion, static_cast<long>(genus) - 1);
      out.value += term;
      largest = std::max(largest, abs(term));
    }
  if (genus == 0 && largest > 0) out.metric = (abs(out.value) / largest).convert_to<double>();
  return out;
}

KhovanskiiReport khovanskii_certify(FiberSolver& solver, int p, int q, const Complex& x) {
  const KnotPreset& preset = solver.preset();
  if (preset.components.size() != 1 || !preset.components[0].apoly)
    throw StructuralError("khovanskii_certify needs a single-component preset with an A-polynomial");
  if (std::gcd(p, q) != 1) throw DomainError("slope (p, q) must have gcd(p, q) = 1");
  const PresetComponent& comp = preset.components[0];

  KhovanskiiReport r;
  r.p = p;
  r.q = q;
  r.x = x;
  const NumericPoly A = to_numeric(*comp.apoly);
  NumericPoly B = NumericPoly::monomial(ml_vars(), {p, q}, Complex(1));
  B.add_term({0, 0}, -x);
  NumericPoly h = NumericPoly::monomial(ml_vars(), {2, 0}, Complex(1));
  h.add_term({-2, 0}, Complex(-1));
  const std::vector<NumericPoly> system{A, B};

  r.nondegenerate = check_nondegenerate(system);
  r.containment = strict_containment(newton_polytope(h), minkowski_sum(newton_polytope(A), newton_polytope(B)));

  const FiberResult fiber = staged("fiber solve", [&] { return solver.solve(p, q, x); });
  std::vector<TorusPoint> zeros;
  for (const auto& pt : fiber.points) zeros.push_back({pt.m, pt.l});
  r.zeros_from_fiber = zeros.size();
  r.zeros_from_resultant = staged("torus solve", [&] { return solve_torus_system(A, B); }).zeros.size();

  r.simplicity = jacobian_simplicity(system, zeros);
  for (const auto& z : zeros) {
    const Complex jac = jacobian(A, B, z);
    const Complex closed = figure_eight_jacobian(p, q, x, z[0], z[1]);
    r.closed_form_jacobian_mismatch =
        std::max(r.closed_form_jacobian_mismatch, relative_distance(jac, closed).convert_to<double>());
  }

  r.residue = staged("residue sum", [&] { return residue_sum(system, h, zeros); });

  // Each residue term times 2 eps x is 1/Tor at that point.
  Real pos = 0;
  Real neg = 0;
  for (const auto& pt : fiber.points) {
    const PointResult pr = staged("torsion", [&] { return point_torsion(preset, pt, p, q, x); });
    const Complex term = evaluate(h, {pt.m, pt.l}) / (pt.m * pt.l * jacobian(A, B, {pt.m, pt.l}));
    const Complex inv = Complex(1) / pr.torsion;
    pos = std::max(pos, relative_distance(inv, Complex(2) * x * term));
    neg = std::max(neg, relative_distance(inv, Complex(-2) * x * term));
  }
  r.epsilon = pos <= neg ? 1 : -1;
  r.torsion_term_mismatch = std::min(pos, neg).convert_to<double>();

  const bool counts_agree = r.zeros_from_fiber == r.zeros_from_resultant;
  const bool hard_fail = r.nondegenerate.verdict == Verdict::fail || r.simplicity.verdict == Verdict::fail ||
                         !r.containment.strict || r.residue.normalized() > Real(1e-7) || !counts_agree;
  const bool soft = r.nondegenerate.verdict == Verdict::indeterminate ||
                    r.simplicity.verdict == Verdict::indeterminate;
  r.verdict = hard_fail ? Verdict::fail : (soft ? Verdict::indeterminate : Verdict::pass);
  return r;
}

}  // namespace adjtor

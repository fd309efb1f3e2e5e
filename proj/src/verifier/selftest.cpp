#include "adjtor/verifier/selftest.hpp"

#include "adjtor/kernels/kernels.hpp"
#include "adjtor/polycore/parse.hpp"
#include "adjtor/polycore/roots.hpp"
#include "adjtor/torsion/fox_torsion.hpp"
#include "adjtor/verifier/verify.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace adjtor {

namespace {

std::string sci(double v) {
  std::ostringstream ss;
  ss << std::setprecision(2) << std::scientific << v;
  return ss.str();
}

double kernel_mismatch() {
  const kernels::KernelSet* fast = kernels::avx2_kernels();
  if (!fast) return 0.0;
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  const std::size_t ncoef = 31, count = 37;
  std::vector<double> cr(ncoef), ci(ncoef), zr(count), zi(count);
  for (auto* v : {&cr, &ci})
    for (auto& x : *v) x = nd(rng);
  for (std::size_t k = 0; k < count; ++k) {
    const double r = 0.5 + 0.02 * static_cast<double>(k);
    zr[k] = r * std::cos(0.7 * static_cast<double>(k));
    zi[k] = r * std::sin(0.7 * static_cast<double>(k));
  }
  std::vector<double> a(4 * count), b(4 * count);
  kernels::scalar_kernels().horner(cr.data(), ci.data(), ncoef, zr.data(), zi.data(), count, &a[0], &a[count],
                                   &a[2 * count], &a[3 * count]);
  fast->horner(cr.data(), ci.data(), ncoef, zr.data(), zi.data(), count, &b[0], &b[count], &b[2 * count],
               &b[3 * count]);
  double worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]) / (1 + std::abs(a[k])));
  kernels::scalar_kernels().aberth_sums(zr.data(), zi.data(), count, &a[0], &a[count]);
  fast->aberth_sums(zr.data(), zi.data(), count, &b[0], &b[count]);
  for (std::size_t k = 0; k < 2 * count; ++k) worst = std::max(worst, std::abs(a[k] - b[k]) / (1 + std::abs(a[k])));
  return worst;
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::ostream& out) {
  std::vector<SelftestCheck> checks;
  const auto run = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    SelftestCheck c{name, false, ""};
    try {
      std::tie(c.passed, c.detail) = body();
    } catch (const std::exception& e) {
      c.detail = std::string("error: ") + e.what();
    }
    out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name << " " << c.detail << std::endl;
    checks.push_back(c);
  };

  for (const auto& name : builtin_preset_names())
    run("preset " + name, [&] {
      const PresetValidation v = validate_preset(load_preset(name));
      return std::pair{v.ok, "relator " + sci(v.worst_relator) + ", longitude " + sci(v.worst_longitude) +
                                 ", A " + sci(v.worst_apoly) + ", closed-form Tor " + sci(v.worst_torsion_formula)};
    });

  run("kernels", [&] {
    const double m = kernel_mismatch();
    const std::string active = std::string("active ") + kernels::active_kernels().name;
    if (!kernels::avx2_kernels()) return std::pair{true, active + ", no AVX2 variant to compare"};
    return std::pair{m <= 1e-12, "avx2 vs scalar " + sci(m) + ", " + active};
  });

  for (const auto& name : builtin_preset_names())
    run("chain vs fox " + name, [&] {
      const KnotPreset preset = load_preset(name);
      const auto pts = sample_riley_points(preset.components[0].riley, 1, 5);
      const Representation rho = two_bridge_representation(pts[0].y, pts[0].m);
      const TorsionPolynomial tp = torsion_polynomial(preset.presentation, rho);
      const OracleAgreement a = compare_with_chain_complex(
          preset.presentation, rho, tp, {Complex(0.6, 0.2), Complex(1.3, -0.4), Complex(-0.9, 1.1), Complex(0.0, 1.7)});
      return std::pair{a.worst_relative <= 1e-9, "sign " + std::to_string(a.sign) + ", t^" + std::to_string(a.power) +
                                                     ", worst " + sci(a.worst_relative)};
    });

  run("figure-eight Tor(lambda)", [&] {
    const KnotPreset preset = load_preset("4_1");
    double worst = 0;
    for (const auto& pt : sample_riley_points(preset.components[0].riley, 6, 9)) {
      const Complex t = torsion_at_longitude(preset.presentation, two_bridge_representation(pt.y, pt.m)).value;
      const Complex m2 = pt.m * pt.m;
      const Complex closed = Complex(2) * m2 - Complex(1) + Complex(2) / m2;
      worst = std::max(worst, std::min(relative_distance(t, closed), relative_distance(t, -closed)).convert_to<double>());
    }
    return std::pair{worst <= 1e-10, "worst " + sci(worst)};
  });

  run("vanishing 4_1 (1,1)", [&] {
    VerifyRequest r;
    r.p = 1;
    r.q = 1;
    r.z = Complex(1.5, 0.5);
    const VerificationReport rep = verify_vanishing("4_1", r);
    return std::pair{rep.verdict == Verdict::pass && rep.point_count() == 8,
                     std::to_string(rep.point_count()) + " points, metric " + sci(rep.vanishing_metric)};
  });

  run("vanishing 5_2 (3,1)", [&] {
    VerifyRequest r;
    r.p = 3;
    r.q = 1;
    r.z = Complex(1.5, 0.5);
    const VerificationReport rep = verify_vanishing("5_2", r);
    return std::pair{rep.verdict == Verdict::pass && rep.point_count() == 23,
                     std::to_string(rep.point_count()) + " points, metric " + sci(rep.vanishing_metric)};
  });

  run("vanishing 7_4 (1,1)", [&] {
    VerifyRequest r;
    r.p = 1;
    r.q = 1;
    r.x = Complex(2, 3);
    r.precision_bits = 128;
    r.tol = 1e-4;
    const VerificationReport rep = verify_vanishing("7_4", r);
    const bool counts = rep.components.size() == 2 && rep.components[0].points.size() == 17 &&
                        rep.components[1].points.size() == 20;
    return std::pair{rep.verdict == Verdict::pass && counts,
                     std::to_string(rep.components[0].points.size()) + "+" +
                         std::to_string(rep.components[1].points.size()) + " points, component 0 sum " +
                         format_complex(rep.components[0].inverse_sum, 5) + ", metric " + sci(rep.vanishing_metric)};
  });

  run("khovanskii 4_1 (1,1)", [&] {
    FiberSolver solver(load_preset("4_1"));
    const KhovanskiiReport k = khovanskii_certify(solver, 1, 1, pick_x(Complex(1.5, 0.5)));
    return std::pair{k.verdict == Verdict::pass,
                     "residue " + sci(k.residue.normalized().convert_to<double>()) + ", eps " + std::to_string(k.epsilon)};
  });

  run("residue (z-1)(z-2), h = z", [&] {
    const Variables v{"z"};
    const NumericPoly f = to_numeric(parse_polynomial("z^2 - 3*z + 2", v));
    const NumericPoly h = to_numeric(parse_polynomial("z", v));
    const ResidueSum s = residue_sum({f}, h, std::vector<std::vector<Complex>>{{Complex(1)}, {Complex(2)}});
    return std::pair{abs(s.sum) <= Real(1e-14), "sum " + format_complex(s.sum, 3)};
  });

  run("twisted index g=1", [&] {
    VerifyRequest r;
    r.p = 3;
    r.q = 1;
    r.z = Complex(1.3, 0.7);
    r.genera = {0, 1};
    const VerificationReport rep = verify_vanishing("4_1", r);
    const IndexValue& g1 = rep.index_values->at(1);
    const bool integer = abs(g1.value - Complex(static_cast<long>(rep.point_count()))) <= Real(1e-12);
    return std::pair{integer && rep.index_values->at(0).metric <= 1e-6,
                     "g=1 " + format_complex(g1.value, 6) + ", g=0 metric " + sci(rep.index_values->at(0).metric)};
  });

  return checks;
}

}  // namespace adjtor

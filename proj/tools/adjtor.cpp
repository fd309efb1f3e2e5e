// Command-line front end.  Exit codes: 0 PASS, 1 FAIL, 2 WARN (an
// indeterminate Khovanskii sub-check), 3 bad input or a solver error.

#include "adjtor/verifier/report.hpp"
#include "adjtor/verifier/selftest.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace adjtor;

struct Options {
  std::string knot = "4_1";
  std::string slope = "1,0";
  std::string z;
  std::string x;
  unsigned precision = 53;
  double tol = 1e-6;
  std::string json;
  int genus = 0;
};

std::pair<int, int> parse_slope(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("slope must be P,Q");
  std::size_t used = 0;
  const std::string ps = text.substr(0, comma), qs = text.substr(comma + 1);
  const int p = std::stoi(ps, &used);
  if (used != ps.size()) throw ParseError("bad slope numerator '" + ps + "'");
  const int q = std::stoi(qs, &used);
  if (used != qs.size()) throw ParseError("bad slope denominator '" + qs + "'");
  return {p, q};
}

VerifyRequest request_from(const Options& o) {
  VerifyRequest r;
  std::tie(r.p, r.q) = parse_slope(o.slope);
  {
    // Parse at the requested precision so the literal is not rounded to 53 bits first.
    PrecisionScope scope(o.precision);
    if (!o.z.empty()) r.z = parse_complex(o.z);
    if (!o.x.empty()) r.x = parse_complex(o.x);
  }
  if (!r.z && !r.x) throw DomainError("one of --z or --x is required");
  r.precision_bits = o.precision;
  r.tol = o.tol;
  return r;
}

int verdict_code(Verdict v) { return v == Verdict::pass ? 0 : v == Verdict::fail ? 1 : 2; }

void finish(const VerificationReport& report, const Options& o, bool list_points) {
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  VerificationReport shown = report;
  shown.warnings.clear();
  std::cout << render_text(shown, list_points);
  if (!o.json.empty()) write_report(report, o.json);
}

void add_common(CLI::App* cmd, Options& o, bool needs_tol) {
  cmd->add_option("--knot", o.knot, "built-in preset name (4_1, 5_2, 7_4) or a preset file")->required();
  cmd->add_option("--slope", o.slope, "slope P,Q of the curve mu^P lambda^Q")->required();
  cmd->add_option("--z", o.z, "trace value A+Bi");
  cmd->add_option("--x", o.x, "eigenvalue-side value A+Bi (overrides --z)");
  cmd->add_option("--precision", o.precision, "working precision in bits")->check(CLI::Range(24u, 4096u));
  if (needs_tol) cmd->add_option("--tol", o.tol, "tolerance on the vanishing metric");
  cmd->add_option("--json", o.json, "write the JSON report to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjoint Reidemeister torsion of two-bridge knots and the vanishing of sum 1/Tor over trace fibers"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "check sum 1/Tor = 0 over a trace fiber");
  add_common(verify, o, true);
  bool list_points = false;
  verify->add_flag("--points", list_points, "list every fiber point");

  auto* index = app.add_subcommand("index", "twisted index sum (d Tor)^(g-1)");
  add_common(index, o, true);
  index->add_option("--genus", o.genus, "genus g >= 0")->required()->check(CLI::NonNegativeNumber);

  auto* grt = app.add_subcommand("certify-grt", "Khovanskii residue-theorem hypotheses for the 4_1 system");
  add_common(grt, o, true);

  auto* torsion = app.add_subcommand("torsion", "print Tor(gamma) at every fiber point");
  add_common(torsion, o, true);

  auto* selftest = app.add_subcommand("selftest", "quick invariant suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest->parsed()) {
      bool ok = true;
      for (const auto& c : run_selftest(std::cout)) ok = ok && c.passed;
      return ok ? 0 : 1;
    }
    VerifyRequest req = request_from(o);
    if (index->parsed()) req.genera = {o.genus};
    if (grt->parsed()) {
      if (!o.x.empty()) req.z.reset();
      req.khovanskii = true;
    }
    FiberSolver solver(load_preset(o.knot));
    const VerificationReport report = verify_vanishing(solver, req);
    finish(report, o, list_points || torsion->parsed());

    if (grt->parsed()) return verdict_code(report.khovanskii->verdict);
    if (index->parsed()) {
      const IndexValue& v = report.index_values->front();
      return v.genus == 0 ? (v.metric <= o.tol ? 0 : 1) : 0;
    }
    if (torsion->parsed()) return 0;
    return verdict_code(report.verdict);
  } catch (const NonGenericError& e) {
    std::cerr << "non-generic input: " << e.what() << "\n";
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << " (worst residual " << e.worst_residual() << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 3;
}

#include "adjtor/verifier/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace adjtor {

namespace {

using nlohmann::json;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json lattice_json(const LatticePoint& p) { return json::array({p[0], p[1]}); }

std::string sci(double v) {
  std::ostringstream ss;
  ss << std::setprecision(3) << std::scientific << v;
  return ss.str();
}

}  // namespace

json complex_json(const Complex& z) {
  return {{"re", z.real().convert_to<double>()}, {"im", z.imag().convert_to<double>()}};
}

json khovanskii_json(const KhovanskiiReport& r) {
  json nd = {{"verdict", to_string(r.nondegenerate.verdict)},
             {"faces_checked", r.nondegenerate.faces_checked},
             {"min_margin", finite_or_null(r.nondegenerate.min_margin)},
             {"witness", r.nondegenerate.witness ? lattice_json(*r.nondegenerate.witness) : json(nullptr)},
             {"notes", r.nondegenerate.notes}};
  json simp = {{"verdict", to_string(r.simplicity.verdict)},
               {"min_jacobian", finite_or_null(r.simplicity.min_jacobian)},
               {"closed_form_mismatch", r.closed_form_jacobian_mismatch}};
  json cont = {{"strict", r.containment.strict},
               {"witness", r.containment.witness ? lattice_json(*r.containment.witness) : json(nullptr)}};
  json res = {{"sum", complex_json(r.residue.sum)},
              {"mean_term", r.residue.mean_term.convert_to<double>()},
              {"normalized", r.residue.normalized().convert_to<double>()}};
  return {{"slope", json::array({r.p, r.q})},
          {"x", complex_json(r.x)},
          {"nondegenerate", nd},
          {"jacobian_simplicity", simp},
          {"strict_containment", cont},
          {"residue_sum", res},
          {"zeros_from_fiber", r.zeros_from_fiber},
          {"zeros_from_resultant", r.zeros_from_resultant},
          {"epsilon", r.epsilon},
          {"torsion_term_mismatch", r.torsion_term_mismatch},
          {"verdict", to_string(r.verdict)}};
}

json report_json(const VerificationReport& r) {
  json components = json::array();
  for (const auto& c : r.components) {
    json points = json::array();
    for (const auto& pr : c.points)
      points.push_back({{"y", complex_json(pr.point.y)},
                        {"m", complex_json(pr.point.m)},
                        {"l", complex_json(pr.point.l)},
                        {"torsion", complex_json(pr.torsion)},
                        {"residual", pr.point.residual}});
    components.push_back(
        {{"index", c.index}, {"sign", c.sign}, {"points", points}, {"inverse_sum", complex_json(c.inverse_sum)}});
  }
  json index = nullptr;
  if (r.index_values) {
    index = json::array();
    for (const auto& v : *r.index_values)
      index.push_back({{"genus", v.genus}, {"value", complex_json(v.value)}, {"metric", v.metric}});
  }
  return {{"preset", r.preset},
          {"slope", json::array({r.p, r.q})},
          {"z", r.z ? complex_json(*r.z) : json(nullptr)},
          {"x", complex_json(r.x)},
          {"precision_bits", r.precision_bits},
          {"components", components},
          {"total_sum", complex_json(r.total_sum)},
          {"vanishing_metric", r.vanishing_metric},
          {"verdict", to_string(r.verdict)},
          {"khovanskii", r.khovanskii ? khovanskii_json(*r.khovanskii) : json(nullptr)},
          {"index_values", index},
          {"elapsed_ms", r.elapsed_ms}};
}

void write_report(const VerificationReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write report to " + path);
  out << report_json(r).dump(2) << "\n";
}

std::string render_khovanskii(const KhovanskiiReport& r) {
  std::ostringstream ss;
  ss << "khovanskii (" << r.p << "," << r.q << ") x = " << format_complex(r.x, 10) << "\n";
  ss << "  non-degenerate       " << to_string(r.nondegenerate.verdict) << "  (" << r.nondegenerate.faces_checked
     << " faces)\n";
  for (const auto& n : r.nondegenerate.notes) ss << "    " << n << "\n";
  ss << "  simple zeros         " << to_string(r.simplicity.verdict) << "  min |Jac|/scale "
     << sci(r.simplicity.min_jacobian) << ", closed form mismatch " << sci(r.closed_form_jacobian_mismatch) << "\n";
  ss << "  strict containment   " << (r.containment.strict ? "PASS" : "FAIL");
  if (r.containment.witness) ss << "  witness (" << (*r.containment.witness)[0] << "," << (*r.containment.witness)[1] << ")";
  ss << "\n";
  ss << "  zeros                " << r.zeros_from_fiber << " from the fiber, " << r.zeros_from_resultant
     << " from the resultant\n";
  ss << "  residue sum          " << format_complex(r.residue.sum, 6) << "  normalized "
     << sci(r.residue.normalized().convert_to<double>()) << "\n";
  ss << "  1/Tor = 2 eps x h/(m l Jac) with eps = " << r.epsilon << ", mismatch " << sci(r.torsion_term_mismatch)
     << "\n";
  ss << "  verdict              " << to_string(r.verdict) << "\n";
  return ss.str();
}

std::string render_text(const VerificationReport& r, bool list_points) {
  std::ostringstream ss;
  ss << r.preset << " slope (" << r.p << "," << r.q << ")";
  if (r.z) ss << " z = " << format_complex(*r.z, 10);
  ss << " x = " << format_complex(r.x, 10) << " at " << r.precision_bits << " bits\n";
  for (const auto& c : r.components) {
    ss << "component " << c.index << ": " << c.points.size() << " points, sign " << (c.sign > 0 ? "+1" : "-1")
       << ", inverse sum " << format_complex(c.inverse_sum, 10) << "\n";
    if (list_points)
      for (const auto& pr : c.points)
        ss << "  m = " << std::setw(28) << std::left << format_complex(pr.point.m, 10)
           << " Tor = " << format_complex(pr.torsion, 10) << "\n";
  }
  if (r.sign_pairings.size() > 1) {
    ss << "sign pairings (component 0 fixed to +1):\n";
    for (std::size_t k = 0; k < r.sign_pairings.size(); ++k) ss << "  #" << k << " total " << format_complex(r.sign_pairings[k], 10) << "\n";
  }
  ss << "total " << format_complex(r.total_sum, 6) << "  metric " << sci(r.vanishing_metric) << "  tol "
     << sci(r.tolerance) << "  " << to_string(r.verdict) << "\n";
  if (r.index_values)
    for (const auto& v : *r.index_values) {
      ss << "index g=" << v.genus << ": " << format_complex(v.value, 12);
      if (v.genus == 0) ss << "  metric " << sci(v.metric);
      ss << "\n";
    }
  if (r.khovanskii) ss << render_khovanskii(*r.khovanskii);
  for (const auto& w : r.warnings) ss << "warning: " << w << "\n";
  ss << "elapsed " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
  return ss.str();
}

}  // namespace adjtor

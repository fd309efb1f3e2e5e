#include "adjtor/residue/khovanskii.hpp"

#include "adjtor/numeric/matrix.hpp"
#include "adjtor/polycore/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace adjtor {

namespace {

double angle_of(const LatticePoint& v) { return std::atan2(static_cast<double>(v[1]), static_cast<double>(v[0])); }

long cross(const LatticePoint& a, const LatticePoint& b) { return a[0] * b[1] - a[1] * b[0]; }

std::string beta_string(const LatticePoint& b) {
  std::ostringstream ss;
  ss << "(" << b[0] << "," << b[1] << ")";
  return ss.str();
}

// Coefficients of a truncation along the primitive direction w (all of its
// exponents lie on one line parallel to w): P(zeta) with zeta = z^w.
std::vector<Complex> along_direction(const NumericPoly& g, const LatticePoint& w) {
  const long ww = w[0] * w[0] + w[1] * w[1];
  long kmin = 0;
  bool first = true;
  std::vector<std::pair<long, Complex>> terms;
  const auto& [e0, c0] = *g.terms().begin();
  for (const auto& [e, c] : g.terms()) {
    const long k = ((e[0] - e0[0]) * w[0] + (e[1] - e0[1]) * w[1]) / ww;
    terms.emplace_back(k, c);
    kmin = first ? k : std::min(kmin, k);
    first = false;
  }
  long kmax = kmin;
  for (const auto& [k, c] : terms) kmax = std::max(kmax, k);
  std::vector<Complex> dense(static_cast<std::size_t>(kmax - kmin + 1), Complex(0));
  for (const auto& [k, c] : terms) dense[static_cast<std::size_t>(k - kmin)] += c;
  return dense;
}

Complex horner(const std::vector<Complex>& c, const Complex& z) {
  Complex acc(0);
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

Real horner_scale(const std::vector<Complex>& c, const Complex& z) {
  const Real r = abs(z);
  Real acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + abs(c[k]);
  return acc;
}

struct FaceCheck {
  Verdict verdict;
  double margin;  // infinity for vacuous faces
};

Verdict classify(double margin) {
  if (margin <= 1e-10) return Verdict::fail;
  if (margin < 1e-8) return Verdict::indeterminate;
  return Verdict::pass;
}

FaceCheck check_face(const FaceSystem& face) {
  const NumericPoly& g1 = face.truncations[0];
  const NumericPoly& g2 = face.truncations[1];
  const double inf = std::numeric_limits<double>::infinity();
  if (g1.size() <= 1 || g2.size() <= 1) return {Verdict::pass, inf};

  if (g1.size() == 2 && g2.size() == 2) {
    // g_i = c_i z^u_i + d_i z^v_i, so z^(u_i - v_i) = -d_i / c_i.
    const auto it1 = g1.terms().begin();
    const auto it2 = g2.terms().begin();
    const auto& [u1, c1] = *it1;
    const auto& [v1, d1] = *std::next(it1);
    const auto& [u2, c2] = *it2;
    const auto& [v2, d2] = *std::next(it2);
    const LatticePoint w1{u1[0] - v1[0], u1[1] - v1[1]};
    const LatticePoint w2{u2[0] - v2[0], u2[1] - v2[1]};
    // A nonzero determinant means finitely many simple zeros: fine.
    if (cross(w1, w2) != 0) return {Verdict::pass, inf};
    // Parallel: w_i = a_i w0.  zeta^a1 = k1 and zeta^a2 = k2 have a common
    // solution iff k1^(a2/g) = k2^(a1/g) with g = gcd(a1, a2).
    const long g0 = std::gcd(std::abs(w1[0]), std::abs(w1[1]));
    const LatticePoint w0{w1[0] / g0, w1[1] / g0};
    const long a1 = g0;
    const long a2 = (w0[0] != 0) ? w2[0] / w0[0] : w2[1] / w0[1];
    const long g = std::gcd(a1, std::abs(a2));
    const Complex k1 = -d1 / c1;
    const Complex k2 = -d2 / c2;
    const Complex lhs = pow(k1, a2 / g);
    const Complex rhs = pow(k2, a1 / g);
    const Real margin = abs(lhs - rhs) / std::max(abs(lhs), abs(rhs));
    const double m = margin.convert_to<double>();
    return {classify(m), m};
  }

  // General truncations: both lie on lines perpendicular to beta.  Reduce to
  // univariate polynomials in zeta = z^w and compare their roots.
  const LatticePoint w{-face.beta[1], face.beta[0]};
  const auto p1 = along_direction(g1, w);
  const auto p2 = along_direction(g2, w);
  const NumericPoly poly1 = from_dense("zeta", p1);
  const auto roots = univariate_roots(poly1);
  double margin = inf;
  for (const auto& r : roots.clusters) {
    const Real s = horner_scale(p2, r.center);
    if (s == 0) continue;
    margin = std::min(margin, (abs(horner(p2, r.center)) / s).convert_to<double>());
  }
  return {classify(margin), margin};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::indeterminate: return "WARN";
  }
  return "?";
}

std::vector<FaceSystem> face_systems(const std::vector<NumericPoly>& fs) {
  if (fs.size() != 2) throw StructuralError("face_systems: only systems of two polynomials are supported");
  for (const auto& f : fs)
    if (f.nvars() != 2) throw StructuralError("face_systems: only two variables are supported");

  std::vector<LatticePoint> rays;
  for (const auto& f : fs)
    for (const auto& n : newton_polytope(f).inward_normals())
      if (std::find(rays.begin(), rays.end(), n) == rays.end()) rays.push_back(n);
  std::sort(rays.begin(), rays.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return angle_of(a) < angle_of(b); });

  std::vector<LatticePoint> betas = rays;
  if (rays.empty()) {
    betas.push_back({1, 0});
  } else if (rays.size() == 1) {
    betas.push_back({-rays[0][0], -rays[0][1]});
  } else {
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const LatticePoint& a = rays[i];
      const LatticePoint& b = rays[(i + 1) % rays.size()];
      const long c = cross(a, b);
      // Interior direction of the cone from a counterclockwise to b.
      if (c > 0) {
        betas.push_back({a[0] + b[0], a[1] + b[1]});
      } else {
        betas.push_back({-a[1], a[0]});
      }
    }
  }

  std::vector<FaceSystem> out;
  for (const auto& beta : betas) out.push_back({beta, {truncation(fs[0], beta), truncation(fs[1], beta)}});
  return out;
}

NondegeneracyReport check_nondegenerate(const std::vector<NumericPoly>& fs) {
  NondegeneracyReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& face : face_systems(fs)) {
    ++report.faces_checked;
    const FaceCheck c = check_face(face);
    report.min_margin = std::min(report.min_margin, c.margin);
    if (c.verdict == Verdict::fail) {
      report.verdict = Verdict::fail;
      if (!report.witness) report.witness = face.beta;
      report.notes.push_back("face " + beta_string(face.beta) + " has a common torus zero");
    } else if (c.verdict == Verdict::indeterminate) {
      if (report.verdict == Verdict::pass) report.verdict = Verdict::indeterminate;
      report.notes.push_back("face " + beta_string(face.beta) + " is borderline");
    }
  }
  return report;
}

SimplicityReport jacobian_simplicity(const std::vector<NumericPoly>& fs, const std::vector<TorusPoint>& zeros) {
  if (fs.size() != 2) throw StructuralError("jacobian_simplicity: only two polynomials are supported");
  SimplicityReport r;
  r.min_jacobian = std::numeric_limits<double>::infinity();
  const auto& v = fs[0].variables();
  const NumericPoly d[2][2] = {{derivative(fs[0], v[0]), derivative(fs[0], v[1])},
                               {derivative(fs[1], v[0]), derivative(fs[1], v[1])}};
  for (const auto& z : zeros) {
    const std::vector<Complex> at{z[0], z[1]};
    const Complex jac = evaluate(d[0][0], at) * evaluate(d[1][1], at) - evaluate(d[0][1], at) * evaluate(d[1][0], at);
    const Real s0 = std::max(evaluation_scale(d[0][0], at), evaluation_scale(d[0][1], at));
    const Real s1 = std::max(evaluation_scale(d[1][0], at), evaluation_scale(d[1][1], at));
    const Real scale = s0 * s1;
    const double rel = scale == 0 ? 0.0 : (abs(jac) / scale).convert_to<double>();
    r.min_jacobian = std::min(r.min_jacobian, rel);
  }
  if (zeros.empty()) {
    r.min_jacobian = 0.0;
    return r;
  }
  r.verdict = classify(r.min_jacobian);
  return r;
}

Complex figure_eight_jacobian(int p, int q, const Complex& x, const Complex& m, const Complex& l) {
  const Complex m2 = m * m;
  const Complex im2 = Complex(1) / m2;
  const Complex bracket = Complex(static_cast<long>(p)) * (l - Complex(1) / l) +
                          Complex(static_cast<long>(2 * q)) * (Complex(2) * m2 - Complex(1) + Complex(2) * im2) *
                              (m2 - im2);
  return -(x / (m * l)) * bracket;
}

Real ResidueSum::normalized() const {
  if (mean_term == 0) return Real(0);
  return abs(sum) / mean_term;
}

ResidueSum residue_sum(const std::vector<NumericPoly>& fs, const NumericPoly& h,
                       const std::vector<std::vector<Complex>>& zeros) {
  const std::size_t n = fs.size();
  if (n == 0) throw StructuralError("residue_sum: empty system");
  for (const auto& f : fs)
    if (f.nvars() != n) throw StructuralError("residue_sum: need n polynomials in n variables");
  h.check_compatible(fs[0]);
  const auto& vars = fs[0].variables();
  std::vector<std::vector<NumericPoly>> d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i].push_back(derivative(fs[i], vars[j]));

  ResidueSum out{Complex(0), Real(0), Real(0)};
  for (const auto& a : zeros) {
    if (a.size() != n) throw StructuralError("residue_sum: zero has the wrong dimension");
    ComplexMatrix jm(n, n, Complex(0));
    Real scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Real row = 0;
      for (std::size_t j = 0; j < n; ++j) {
        jm(i, j) = evaluate(d[i][j], a);
        row = std::max(row, evaluation_scale(d[i][j], a));
      }
      scale *= row;
    }
    const Complex jac = determinant(jm);
    if (abs(jac) < Real(1e-8) * scale) throw NonGenericError("residue_sum: a zero is not simple (Jacobian vanishes)");
    Complex prod(1);
    for (const auto& c : a) prod *= c;
    const Complex term = evaluate(h, a) / (prod * jac);
    out.sum += term;
    out.max_term = std::max(out.max_term, abs(term));
    out.mean_term += abs(term);
  }
  if (!zeros.empty()) out.mean_term /= Real(static_cast<long>(zeros.size()));
  return out;
}

ResidueSum residue_sum(const std::vector<NumericPoly>& fs, const NumericPoly& h, const std::vector<TorusPoint>& zeros) {
  std::vector<std::vector<Complex>> z;
  z.reserve(zeros.size());
  for (const auto& p : zeros) z.push_back({p[0], p[1]});
  return residue_sum(fs, h, z);
}

}  // namespace adjtor

#include "adjtor/torsion/fox_torsion.hpp"

namespace adjtor {

namespace {

bool is_negligible(const NumericPoly& p, const Real& reference) {
  for (const auto& [e, c] : p.terms())
    if (abs(c) > scaled_tolerance(1e-10) * reference) return false;
  return true;
}

}  // namespace

TorsionPolynomial torsion_polynomial(const Presentation& pres, const Representation& rho, int j) {
  const int n = pres.generator_count();
  const std::size_t k = pres.relators().size();
  if (j < 0 || j > n) throw StructuralError("torsion_polynomial: deleted index out of range");
  const Real trim = scaled_tolerance(1e-13);

  for (int cand = (j == 0 ? 1 : j); cand <= (j == 0 ? n : j); ++cand) {
    GroupRingElement gj = GroupRingElement(Word::generator(cand)) - GroupRingElement::one();
    const PolyMatrix den_matrix = phi(gj, rho, pres);
    const NumericPoly den = determinant(den_matrix, trim);
    Real reference = 1;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        for (const auto& [e, v] : den_matrix(r, c).terms())
          if (abs(v) > reference) reference = abs(v);
    if (den.is_zero() || is_negligible(den, reference * reference * reference)) continue;

    // Numerator: the 3k x 3k matrix of Fox blocks with generator block cand removed.
    PolyMatrix num_matrix(3 * k, 3 * k, "t");
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t col = 0;
      for (int g = 1; g <= n; ++g) {
        if (g == cand) continue;
        const PolyMatrix block = phi(fox_derivative(pres.relators()[a], g), rho, pres);
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = 0; c < 3; ++c) num_matrix(3 * a + r, 3 * col + c) = block(r, c);
        ++col;
      }
    }
    const NumericPoly num = determinant(num_matrix, trim);
    RationalFunction raw(num, den);
    return {raw, normalize(raw), cand};
  }
  throw NonGenericError("every choice of deleted generator gives a vanishing denominator");
}

TorsionValue torsion_at_longitude(const TorsionPolynomial& tp) {
  RationalFunction r = tp.raw;
  const Complex one(1);
  r.cancel_common_root(one, scaled_tolerance(1e-8));
  const auto [value, deriv] = r.value_and_derivative(one);
  const Real scale = evaluation_scale(r.numerator(), {one}) / abs(evaluate(r.denominator(), {one}));
  if (abs(value) > scaled_tolerance(1e-8) * scale)
    throw NonGenericError("torsion polynomial does not vanish at t = 1");
  if (abs(deriv) < Real(1e-6) * scale)
    throw NonGenericError("torsion polynomial has a multiple zero at t = 1 (character is not longitude-regular)");
  TorsionValue out;
  out.value = -deriv;
  out.sign_fixed = false;
  return out;
}

TorsionValue torsion_at_longitude(const Presentation& pres, const Representation& rho) {
  return torsion_at_longitude(torsion_polynomial(pres, rho));
}

OracleAgreement compare_with_chain_complex(const Presentation& pres, const Representation& rho,
                                           const TorsionPolynomial& tp, const std::vector<Complex>& t0s) {
  std::vector<Complex> chain, fox;
  ChainTorsionOptions opts;
  opts.convention = TorsionConvention::alternating_shifted;
  for (const auto& t0 : t0s) {
    chain.push_back(chain_torsion(presentation_complex(pres, rho, t0), opts).value);
    fox.push_back(tp.raw.value_and_derivative(t0).first);
  }
  OracleAgreement best;
  best.worst_relative = -1;
  for (int power = -12; power <= 12; ++power)
    for (int sign : {1, -1}) {
      Real worst = 0;
      for (std::size_t k = 0; k < t0s.size(); ++k) {
        const Complex predicted = Complex(static_cast<long>(sign)) * pow(t0s[k], power) * fox[k];
        worst = std::max(worst, abs(chain[k] - predicted) / std::max(abs(chain[k]), abs(predicted)));
      }
      if (best.worst_relative < 0 || worst < best.worst_relative) best = {sign, power, worst.convert_to<double>()};
    }
  return best;
}

}  // namespace adjtor

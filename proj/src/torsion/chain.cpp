#include "adjtor/torsion/chain.hpp"

#include <random>

namespace adjtor {

namespace {

Real column_norm(const ComplexMatrix& m, std::size_t c) {
  Real s = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) s += norm(m(r, c));
  return boost::multiprecision::sqrt(s);
}

ComplexMatrix hconcat(const std::vector<const ComplexMatrix*>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto* p : parts) cols += p->cols();
  ComplexMatrix out(rows, cols, Complex(0));
  std::size_t at = 0;
  for (const auto* p : parts) {
    if (p->cols() > 0 && p->rows() != rows) throw StructuralError("chain torsion: block height mismatch");
    for (std::size_t r = 0; r < p->rows(); ++r)
      for (std::size_t c = 0; c < p->cols(); ++c) out(r, at + c) = (*p)(r, c);
    at += p->cols();
  }
  return out;
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(u(rng), u(rng));
  return m;
}

}  // namespace

void BasedChainComplex::validate() const {
  if (dims.empty()) throw StructuralError("chain complex without chain groups");
  const std::size_t n = dims.size() - 1;
  if (boundaries.size() != n) throw StructuralError("chain complex needs one boundary map per positive degree");
  if (!homology.empty() && homology.size() != dims.size())
    throw StructuralError("homology bases must be given for every degree or none");
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& d = boundaries[i - 1];
    if (d.rows() != dims[i - 1] || d.cols() != dims[i]) throw StructuralError("boundary map has the wrong shape");
  }
  const Real tol = scaled_tolerance(1e-10);
  for (std::size_t i = 1; i < n; ++i) {
    const auto& lower = boundaries[i - 1];
    const auto& upper = boundaries[i];
    const Real scale = max_abs(lower) * max_abs(upper);
    if (scale > 0 && max_abs(lower * upper) > tol * scale) throw StructuralError("boundary maps do not compose to zero");
  }
  if (homology.empty()) return;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto& h = homology[i];
    if (h.cols() == 0) continue;
    if (h.rows() != dims[i]) throw StructuralError("homology vector has the wrong length");
    if (i == 0) continue;
    const auto& d = boundaries[i - 1];
    const Real scale = max_abs(d) * max_abs(h);
    if (scale > 0 && max_abs(d * h) > tol * scale) throw StructuralError("homology representative is not a cycle");
  }
}

TorsionValue chain_torsion(const BasedChainComplex& cx, const ChainTorsionOptions& options) {
  cx.validate();
  const std::size_t n = cx.dims.size() - 1;
  const Real rank_tol = scaled_tolerance(1e-10);
  std::mt19937_64 rng(options.seed.value_or(0));

  // rank[i] = rank of d_i (d_0 and d_(n+1) are zero).
  std::vector<std::size_t> rank(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) rank[i] = numerical_rank(cx.boundaries[i - 1], rank_tol);

  std::vector<ComplexMatrix> hb(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    hb[i] = cx.homology.empty() ? ComplexMatrix(cx.dims[i], 0) : cx.homology[i];
    if (rank[i + 1] + hb[i].cols() + rank[i] != cx.dims[i])
      throw StructuralError("chain torsion: ranks and homology dimensions are inconsistent in degree " +
                            std::to_string(i));
  }

  // b[i] in C_i with d_i(b_i) a basis of the image of d_i.
  std::vector<ComplexMatrix> b(n + 2);
  b[0] = ComplexMatrix(cx.dims[0], 0);
  b[n + 1] = ComplexMatrix(0, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& d = cx.boundaries[i - 1];
    if (!options.seed) {
      const auto cols = independent_columns(d, rank_tol);
      ComplexMatrix pick(cx.dims[i], cols.size(), Complex(0));
      for (std::size_t k = 0; k < cols.size(); ++k) pick(cols[k], k) = Complex(1);
      b[i] = pick;
      continue;
    }
    for (int attempt = 0;; ++attempt) {
      if (attempt == 20) throw StructuralError("chain torsion: could not find a random b_i");
      ComplexMatrix q = random_matrix(cx.dims[i], rank[i], rng);
      if (numerical_rank(d * q, rank_tol) == rank[i]) {
        b[i] = q;
        break;
      }
    }
  }
  if (options.seed) {
    // Move homology representatives by random boundaries.
    for (std::size_t i = 0; i < n; ++i) {
      if (hb[i].cols() == 0) continue;
      const auto& d = cx.boundaries[i];
      hb[i] = hb[i] + d * random_matrix(d.cols(), hb[i].cols(), rng);
    }
  }

  TorsionValue out;
  Complex product(1);
  for (std::size_t i = 0; i <= n; ++i) {
    ComplexMatrix image = i < n ? cx.boundaries[i] * b[i + 1] : ComplexMatrix(cx.dims[i], 0);
    const ComplexMatrix block = hconcat({&image, &hb[i], &b[i]}, cx.dims[i]);
    if (block.cols() == 0) continue;
    const Complex det = determinant(block);
    Real volume = 1;
    for (std::size_t c = 0; c < block.cols(); ++c) volume *= column_norm(block, c);
    if (abs(det) <= Real(1e-10) * volume)
      out.warnings.push_back("near-singular transition matrix in degree " + std::to_string(i));
    if (det.is_zero()) throw StructuralError("chain torsion: singular transition matrix in degree " + std::to_string(i));
    const bool invert = (options.convention == TorsionConvention::alternating) ? (i % 2 == 1) : (i % 2 == 0);
    product = invert ? product / det : product * det;
  }

  // (-1)^|C| with |C| = sum_i alpha_i beta_i, alpha_i = sum_{j<=i} dim C_j and
  // beta_i = sum_{j<=i} dim H_j.
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t parity = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    alpha += cx.dims[i];
    beta += hb[i].cols();
    parity += alpha * beta;
  }
  out.value = (parity % 2 == 1) ? -product : product;
  out.sign_fixed = true;
  return out;
}

BasedChainComplex presentation_complex(const Presentation& pres, const Representation& rho, const Complex& t0) {
  const std::size_t n = static_cast<std::size_t>(pres.generator_count());
  const std::size_t k = pres.relators().size();
  BasedChainComplex cx;
  cx.dims = {3, 3 * n, 3 * k};

  // Row form: D2 (3k x 3n) has blocks Phi(dr_a/dg_j); D1 (3n x 3) stacks
  // Phi(g_j - 1).  The boundary matrices are their transposes.
  ComplexMatrix d2(3 * k, 3 * n, Complex(0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      const auto block = phi(fox_derivative(pres.relators()[a], static_cast<int>(j + 1)), rho, pres).evaluate_at(t0);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) d2(3 * a + r, 3 * j + c) = block(r, c);
    }
  ComplexMatrix d1(3 * n, 3, Complex(0));
  for (std::size_t j = 0; j < n; ++j) {
    GroupRingElement gj = GroupRingElement(Word::generator(static_cast<int>(j + 1))) - GroupRingElement::one();
    const auto block = phi(gj, rho, pres).evaluate_at(t0);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) d1(3 * j + r, c) = block(r, c);
  }
  cx.boundaries = {d1.transpose(), d2.transpose()};
  cx.homology = {};
  return cx;
}

}  // namespace adjtor

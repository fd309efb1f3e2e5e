#pragma once

// Complex scalars at a runtime-selected binary precision.
//
// All floating arithmetic in the pipeline goes through Real/Complex so that a
// single run can be repeated at 53, 128 or 256 bits without recompiling.  The
// precision is a property of the run: open a PrecisionScope before building
// any values and keep it alive for the whole computation.

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <iosfwd>
#include <string>

namespace adjtor {

using Real = boost::multiprecision::mpfr_float;

/// Sets the working precision (in bits) for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_bits_;
  unsigned saved_digits_;
};

/// Bits requested by the innermost PrecisionScope (53 when none is open).
unsigned working_bits();

/// Unit roundoff 2^(1-bits) of the working precision.
Real working_epsilon();

/// Scales a tolerance stated for 53-bit runs to the working precision:
/// tol * 2^(53 - bits), never larger than tol.
Real scaled_tolerance(double tol_at_53_bits);

class Complex {
 public:
  Complex() : re_(0), im_(0) {}
  Complex(const Real& re) : re_(re), im_(0) {}  // NOLINT(implicit)
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im = 0.0) : re_(re), im_(im) {}  // NOLINT(implicit)
  Complex(int re) : re_(re), im_(0) {}                       // NOLINT(implicit)
  Complex(long re) : re_(re), im_(0) {}                      // NOLINT(implicit)
  explicit Complex(const std::complex<double>& z) : re_(z.real()), im_(z.imag()) {}

  static Complex i() { return {Real(0), Real(1)}; }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  Complex operator-() const { return {Real(-re_), Real(-im_)}; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  std::complex<double> to_std() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
  }

 private:
  Real re_;
  Real im_;
};

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex pow(const Complex& z, long n);
Complex polar(const Real& r, const Real& theta);
Real pi();

/// Copy of z rounded to the given precision.  Needed because copies keep the
/// precision of their source and arithmetic keeps the larger of its operands'.
Complex with_precision(const Complex& z, unsigned bits);

/// |a - b| / max(1, |a|, |b|)
Real relative_distance(const Complex& a, const Complex& b);

/// Parses the CLI literal format "A+Bi", "A-Bi", "A", "Bi" (no spaces).
Complex parse_complex(const std::string& text);

/// "A+Bi" with the given number of significant digits.
std::string format_complex(const Complex& z, int digits = 10);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace adjtor

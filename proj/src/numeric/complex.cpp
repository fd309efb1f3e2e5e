#include "adjtor/numeric/complex.hpp"

#include "adjtor/numeric/errors.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace adjtor {

namespace {

thread_local unsigned g_bits = 53;

unsigned digits10_for_bits(unsigned bits) {
  // boost rounds digits10 up to a bit count; pick the smallest digits10 whose
  // bit count covers the request.
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

struct DefaultPrecisionInit {
  DefaultPrecisionInit() { Real::default_precision(digits10_for_bits(53)); }
};
const DefaultPrecisionInit kInit;

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits)
    : saved_bits_(g_bits), saved_digits_(Real::default_precision()) {
  if (bits < 53) throw DomainError("precision must be at least 53 bits");
  g_bits = bits;
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() {
  g_bits = saved_bits_;
  Real::default_precision(saved_digits_);
}

unsigned working_bits() { return g_bits; }

Real working_epsilon() { return boost::multiprecision::ldexp(Real(1), 1 - static_cast<int>(g_bits)); }

Real scaled_tolerance(double tol_at_53_bits) {
  return boost::multiprecision::ldexp(Real(tol_at_53_bits), 53 - static_cast<int>(g_bits));
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re_ * o.re_ + o.im_ * o.im_;
  if (d == 0) throw DomainError("complex division by zero");
  Real re = (re_ * o.re_ + im_ * o.im_) / d;
  im_ = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  return *this;
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.real(), z.imag()); }

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real arg(const Complex& z) { return boost::multiprecision::atan2(z.imag(), z.real()); }

Complex conj(const Complex& z) { return {z.real(), Real(-z.imag())}; }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return {};
  Real r = abs(z);
  Real a = boost::multiprecision::sqrt((r + boost::multiprecision::abs(z.real())) / 2);
  if (z.real() >= 0) return {a, Real(z.imag() / (2 * a))};
  Real b = z.imag() >= 0 ? a : Real(-a);
  return {Real(boost::multiprecision::abs(z.imag()) / (2 * a)), b};
}

Complex exp(const Complex& z) {
  Real r = boost::multiprecision::exp(z.real());
  return {Real(r * boost::multiprecision::cos(z.imag())), Real(r * boost::multiprecision::sin(z.imag()))};
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return {Real(boost::multiprecision::log(abs(z))), arg(z)};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    if (z.is_zero()) throw DomainError("negative power of zero");
    return Complex(1) / pow(z, -n);
  }
  Complex result(1);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex polar(const Real& r, const Real& theta) {
  return {Real(r * boost::multiprecision::cos(theta)), Real(r * boost::multiprecision::sin(theta))};
}

Real pi() { return boost::math::constants::pi<Real>(); }

Complex with_precision(const Complex& z, unsigned bits) {
  const unsigned digits = digits10_for_bits(bits);
  return {Real(z.real(), digits), Real(z.imag(), digits)};
}

Real relative_distance(const Complex& a, const Complex& b) {
  Real scale = 1;
  Real aa = abs(a);
  Real bb = abs(b);
  if (aa > scale) scale = aa;
  if (bb > scale) scale = bb;
  return abs(a - b) / scale;
}

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw ParseError("empty complex literal");
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  auto parse_real = [&](const std::string& part) -> Real {
    if (part.empty() || part == "+") return Real(1);
    if (part == "-") return Real(-1);
    std::size_t used = 0;
    try {
      (void)std::stod(part, &used);
    } catch (const std::exception&) {
      throw ParseError("bad number in complex literal: " + text);
    }
    if (used != part.size()) throw ParseError("bad number in complex literal: " + text);
    return Real(part);
  };
  if (s.back() != 'i') return {parse_real(s), Real(0)};
  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Real(0), parse_real(body)};
  return {parse_real(body.substr(0, split)), parse_real(body.substr(split))};
}

std::string format_complex(const Complex& z, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << z.real();
  Real im = z.imag();
  if (im < 0 || (im == 0 && boost::multiprecision::signbit(im))) {
    os << "-" << std::setprecision(digits) << Real(-im) << "i";
  } else {
    os << "+" << std::setprecision(digits) << im << "i";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << format_complex(z, static_cast<int>(os.precision()));
}

}  // namespace adjtor

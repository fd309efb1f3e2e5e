#pragma once

#include "adjtor/adjointrep/adjoint.hpp"
#include "adjtor/foxcalc/presentation.hpp"
#include "adjtor/polycore/laurent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adjtor {

/// Variables of Riley polynomials and longitude expressions.
inline const Variables& ym_vars() {
  static const Variables v{"y", "m"};
  return v;
}

/// Variables of A-polynomials.
inline const Variables& ml_vars() {
  static const Variables v{"m", "l"};
  return v;
}

struct PresetComponent {
  ExactPoly riley;                          // f(y, m)
  ExactPoly longitude;                      // l(y, m), the (1,1) entry of rho(lambda)
  std::optional<ExactPoly> apoly;           // A(m, l)
  std::optional<ExactPoly> tor_lambda;      // closed form numerator, (y, m)
  std::optional<ExactPoly> tor_lambda_den;  // closed form denominator, (y, m)
};

enum class SlopeRoute { apoly, bordered };

struct KnotPreset {
  std::string name;
  Presentation presentation;
  Word meridian;
  Word longitude;
  SlopeRoute slope_route = SlopeRoute::bordered;
  std::vector<PresetComponent> components;
};

/// Parses the preset text format (key = value lines, indented continuation
/// lines, `#` comments, one `[component]` section per component).
KnotPreset parse_preset(const std::string& text);

/// A built-in name (4_1, 5_2, 7_4) or a path to a preset file.
KnotPreset load_preset(const std::string& name_or_path);

std::vector<std::string> builtin_preset_names();

struct PresetValidation {
  bool ok = true;
  double worst_relator = 0.0;    // max ||rho(r) - I|| / scale
  double worst_longitude = 0.0;  // max |rho(lambda)_11 - l(y,m)| / (1 + |l|)
  double worst_trace = 0.0;      // max |tr rho(lambda) - (l + 1/l)| / (1 + |l + 1/l|)
  double worst_apoly = 0.0;      // max distance from A's l-roots to the fiber's l values
  double worst_torsion_formula = 0.0;  // closed-form Tor(lambda) vs Fox, up to sign
  std::vector<std::string> messages;
};

/// Checks relators, longitude expressions and A-polynomial factors at random
/// solutions of each Riley polynomial.
PresetValidation validate_preset(const KnotPreset& preset, int samples = 20, std::uint64_t seed = 7);

/// A random solution (y, m) of the component's Riley polynomial.
struct RileyPoint {
  Complex y, m;
};
std::vector<RileyPoint> sample_riley_points(const ExactPoly& riley, int count, std::uint64_t seed);

}  // namespace adjtor

#include "adjtor/charvariety/preset.hpp"

#include "adjtor/polycore/parse.hpp"
#include "adjtor/polycore/roots.hpp"
#include "adjtor/torsion/fox_torsion.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace adjtor {

namespace {

struct BuiltinPreset {
  const char* name;
  const char* text;
};

const BuiltinPreset kBuiltins[] = {
#include "builtin_presets.inc"
};

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

using Section = std::vector<std::pair<std::string, std::string>>;

// Splits the text into the header section and one section per [component].
std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> sections(1);
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    const bool continuation = std::isspace(static_cast<unsigned char>(line[0]));
    const std::string body = trim(line);
    if (body == "[component]") {
      sections.emplace_back();
      continue;
    }
    if (body.front() == '[') throw ParseError("preset line " + std::to_string(line_no) + ": unknown section " + body);
    if (continuation) {
      if (sections.back().empty())
        throw ParseError("preset line " + std::to_string(line_no) + ": continuation without a key");
      sections.back().back().second += " " + body;
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("preset line " + std::to_string(line_no) + ": expected key = value");
    sections.back().emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  return sections;
}

std::map<std::string, std::string> to_map(const Section& s, const std::vector<std::string>& allowed,
                                          const std::string& where) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : s) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw ParseError(where + ": unknown key '" + k + "'");
    if (!out.emplace(k, v).second) throw ParseError(where + ": duplicate key '" + k + "'");
  }
  return out;
}

const std::string& required(const std::map<std::string, std::string>& m, const std::string& key,
                            const std::string& where) {
  const auto it = m.find(key);
  if (it == m.end()) throw ParseError(where + ": missing key '" + key + "'");
  return it->second;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Word parse_relator(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) return parse_word(text);
  return relator_from_relation(parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1)));
}

// Largest entry met while multiplying out the word: the scale of the rounding
// error in rho(w).
Real word_scale(const Representation& rho, const Word& w) {
  Mat2 acc = Mat2::identity();
  Real worst = 1;
  for (const auto& letter : w.letters()) {
    const Mat2& g = rho.images()[static_cast<std::size_t>(letter.generator - 1)];
    acc = acc * (letter.exponent > 0 ? g : g.sl2_inverse());
    worst = std::max(worst, acc.max_abs());
  }
  return worst;
}

Complex closed_form_torsion(const PresetComponent& comp, const RileyPoint& pt) {
  const std::vector<Complex> at{pt.y, pt.m};
  Complex v = evaluate(*comp.tor_lambda, at);
  if (comp.tor_lambda_den) v /= evaluate(*comp.tor_lambda_den, at);
  return v;
}

}  // namespace

KnotPreset parse_preset(const std::string& text) {
  const auto sections = split_sections(text);
  const auto head = to_map(sections[0],
                           {"name", "generators", "relators", "meridian", "longitude", "abelianization", "slope_route"},
                           "preset header");
  const std::string name = required(head, "name", "preset header");
  const std::string where = "preset " + name;

  int gens = 0;
  try {
    gens = std::stoi(required(head, "generators", where));
  } catch (const std::logic_error&) {
    throw ParseError(where + ": generators must be an integer");
  }
  if (gens != 2) throw ParseError(where + ": only two-generator presets are supported");

  std::vector<Word> relators;
  for (const auto& r : split(required(head, "relators", where), ';')) relators.push_back(parse_relator(r));

  std::vector<int> alpha(static_cast<std::size_t>(gens), 1);
  if (head.count("abelianization")) {
    std::istringstream in(head.at("abelianization"));
    alpha.clear();
    int a = 0;
    while (in >> a) alpha.push_back(a);
    if (!in.eof() || alpha.size() != static_cast<std::size_t>(gens))
      throw ParseError(where + ": abelianization needs one integer per generator");
  }

  KnotPreset p{name, Presentation(gens, relators, alpha), parse_word(required(head, "meridian", where)),
               parse_word(required(head, "longitude", where)), SlopeRoute::bordered, {}};
  if (p.meridian != Word::generator(1)) throw ParseError(where + ": the meridian must be g1");

  if (head.count("slope_route")) {
    const std::string& route = head.at("slope_route");
    if (route == "apoly") {
      p.slope_route = SlopeRoute::apoly;
    } else if (route != "bordered") {
      throw ParseError(where + ": slope_route must be apoly or bordered");
    }
  }

  for (std::size_t s = 1; s < sections.size(); ++s) {
    const std::string cwhere = where + " component " + std::to_string(s);
    const auto c = to_map(sections[s], {"riley", "longitude_expr", "apoly", "tor_lambda", "tor_lambda_den"}, cwhere);
    PresetComponent comp{parse_polynomial(required(c, "riley", cwhere), ym_vars()),
                         parse_polynomial(required(c, "longitude_expr", cwhere), ym_vars()),
                         {}, {}, {}};
    if (c.count("apoly")) comp.apoly = parse_polynomial(c.at("apoly"), ml_vars());
    if (c.count("tor_lambda")) comp.tor_lambda = parse_polynomial(c.at("tor_lambda"), ym_vars());
    if (c.count("tor_lambda_den")) {
      if (!comp.tor_lambda) throw ParseError(cwhere + ": tor_lambda_den without tor_lambda");
      comp.tor_lambda_den = parse_polynomial(c.at("tor_lambda_den"), ym_vars());
    }
    const auto [ylo, yhi] = degree_range(comp.riley, "y");
    if (ylo < 0 || yhi < 1) throw ParseError(cwhere + ": riley must be a polynomial of positive degree in y");
    p.components.push_back(std::move(comp));
  }
  if (p.components.empty()) throw ParseError(where + ": no [component] sections");
  if (p.slope_route == SlopeRoute::apoly)
    for (const auto& c : p.components)
      if (!c.apoly) throw ParseError(where + ": slope_route = apoly needs an apoly for every component");
  return p;
}

std::vector<std::string> builtin_preset_names() {
  std::vector<std::string> out;
  for (const auto& b : kBuiltins) out.emplace_back(b.name);
  return out;
}

KnotPreset load_preset(const std::string& name_or_path) {
  for (const auto& b : kBuiltins)
    if (name_or_path == b.name) return parse_preset(b.text);
  std::ifstream in(name_or_path);
  if (!in) throw DomainError("unknown preset '" + name_or_path + "' (not a built-in name or a readable file)");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_preset(ss.str());
}

std::vector<RileyPoint> sample_riley_points(const ExactPoly& riley, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> modulus(0.8, 1.25);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::vector<RileyPoint> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex m = polar(Real(modulus(rng)), Real(angle(rng)));
    const auto ys = univariate_roots(substitute(riley, "m", m));
    for (const auto& c : ys.clusters) {
      if (c.multiplicity != 1) continue;
      out.push_back({c.center, m});
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

PresetValidation validate_preset(const KnotPreset& preset, int samples, std::uint64_t seed) {
  PresetValidation v;
  for (std::size_t ci = 0; ci < preset.components.size(); ++ci) {
    const PresetComponent& comp = preset.components[ci];
    const auto points = sample_riley_points(comp.riley, samples, seed + ci);
    for (const auto& pt : points) {
      const Representation rho = two_bridge_representation(pt.y, pt.m);
      for (const auto& r : preset.presentation.relators()) {
        const Mat2 img = rho.evaluate(r);
        const Mat2 diff{img.a - Complex(1), img.b, img.c, img.d - Complex(1)};
        v.worst_relator = std::max(v.worst_relator, (diff.max_abs() / word_scale(rho, r)).convert_to<double>());
      }
      const Mat2 lam = rho.evaluate(preset.longitude);
      const Complex l = evaluate(comp.longitude, {pt.y, pt.m});
      const Real lscale = std::max(word_scale(rho, preset.longitude),
                                   evaluation_scale(comp.longitude, {pt.y, pt.m}) / (1 + abs(l)));
      const Real dl = std::max(abs(lam.a - l), abs(lam.c));
      v.worst_longitude = std::max(v.worst_longitude, (dl / (lscale * (1 + abs(l)))).convert_to<double>());
      const Complex tr = l + Complex(1) / l;
      v.worst_trace = std::max(v.worst_trace, (abs(lam.trace() - tr) / (lscale * (1 + abs(tr)))).convert_to<double>());
    }

    // Every l-root of A(m0, l) must be the longitude eigenvalue at some point
    // of the Riley fiber over m0.
    if (comp.apoly) {
      std::mt19937_64 rng(seed + 100 + ci);
      std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
      std::uniform_real_distribution<double> modulus(0.8, 1.25);
      for (int s = 0; s < std::max(1, samples / 4); ++s) {
        const Complex m0 = polar(Real(modulus(rng)), Real(angle(rng)));
        std::vector<Complex> ls;
        for (const auto& c : univariate_roots(substitute(comp.riley, "m", m0)).clusters)
          ls.push_back(evaluate(comp.longitude, {c.center, m0}));
        for (const auto& c : univariate_roots(substitute(*comp.apoly, "m", m0)).clusters) {
          Real best = -1;
          for (const auto& l : ls) {
            const Real d = abs(c.center - l) / (1 + abs(l));
            if (best < 0 || d < best) best = d;
          }
          v.worst_apoly = std::max(v.worst_apoly, best < 0 ? 1.0 : best.convert_to<double>());
        }
      }
    }

    // Closed-form torsion against the Fox computation, up to a global sign.
    if (comp.tor_lambda) {
      const auto few = sample_riley_points(comp.riley, 3, seed + 200 + ci);
      for (const auto& pt : few) {
        try {
          const Complex fox = torsion_at_longitude(preset.presentation, two_bridge_representation(pt.y, pt.m)).value;
          const Complex closed = closed_form_torsion(comp, pt);
          const Real d = std::min(relative_distance(fox, closed), relative_distance(fox, -closed));
          v.worst_torsion_formula = std::max(v.worst_torsion_formula, d.convert_to<double>());
        } catch (const NonGenericError&) {
          // A sample on the non-generic locus says nothing about the formula.
        }
      }
    }
  }

  const auto check = [&](double value, double tol, const std::string& what) {
    if (value > tol) {
      v.ok = false;
      std::ostringstream ss;
      ss << preset.name << ": " << what << " mismatch " << value << " exceeds " << tol;
      v.messages.push_back(ss.str());
    }
  };
  check(v.worst_relator, 1e-8, "relator");
  check(v.worst_longitude, 1e-8, "longitude eigenvalue");
  check(v.worst_trace, 1e-8, "longitude trace");
  check(v.worst_apoly, 1e-6, "A-polynomial root");
  check(v.worst_torsion_formula, 1e-6, "closed-form torsion");
  return v;
}

}  // namespace adjtor

#include "cmoment/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include "cmoment/error.hpp"

namespace cmoment::io {

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                std::initializer_list<const char*> required, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw ParseError(std::string(what) + ": unknown field '" + key + "'");
  for (const char* key : required)
    if (!j.contains(key)) throw ParseError(std::string(what) + ": missing field '" + key + "'");
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Real real_value(const json& j) {
  if (j.is_number()) return Real(j.get<double>(), working_digits());
  if (j.is_string()) {
    try {
      return Real(j.get<std::string>(), working_digits());
    } catch (const std::exception&) {
      throw ParseError("'" + j.get<std::string>() + "' is not a real number");
    }
  }
  throw ParseError("moment values must be numbers or decimal strings");
}

const json& array_field(const json& j, const char* key) {
  const json& a = j.at(key);
  if (!a.is_array()) throw ParseError(std::string(key) + " must be an array");
  return a;
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json point_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string real_string(const Real& x) {
  return x.str(static_cast<std::streamsize>(x.precision()) - 1, std::ios_base::scientific);
}

json to_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms())
    atoms.push_back({{"re", a.location.real()}, {"im", a.location.imag()}, {"w", a.weight}});
  return {{"domain", to_string(mu.domain())}, {"atoms", atoms}};
}

DiscreteMeasure measure_from_json(const json& j) {
  check_keys(j, {"domain", "atoms"}, {"atoms"}, "measure");
  Domain d = Domain::complex_plane;
  if (j.contains("domain")) {
    if (!j["domain"].is_string()) throw ParseError("measure domain must be a string");
    d = domain_from_string(j["domain"].get<std::string>());
  }
  std::vector<Atom> atoms;
  for (const auto& a : array_field(j, "atoms")) {
    check_keys(a, {"re", "im", "w"}, {"re", "w"}, "atom");
    const double im = a.contains("im") ? number(a["im"], "atom im") : 0.0;
    atoms.push_back({Complex(number(a["re"], "atom re"), im), number(a["w"], "atom weight")});
  }
  return DiscreteMeasure(d, std::move(atoms));
}

bool is_density_json(const json& j) { return j.is_object() && j.contains("preset"); }

DensityMeasure1D density_from_json(const json& j, const QuadratureSpec& spec) {
  check_keys(j, {"preset", "lambda", "lower", "upper"}, {"preset"}, "density");
  const std::string preset = j["preset"].is_string() ? j["preset"].get<std::string>() : "";
  if (preset == "uniform") {
    const double lo = j.contains("lower") ? number(j["lower"], "lower") : 0.0;
    const double hi = j.contains("upper") ? number(j["upper"], "upper") : 1.0;
    if (j.contains("lambda")) throw ParseError("uniform density takes no lambda");
    return DensityMeasure1D::uniform(lo, hi, spec);
  }
  if (preset == "stieltjes" || preset == "lognormal") {
    if (j.contains("lower") || j.contains("upper"))
      throw ParseError("the Stieltjes family lives on (0, inf)");
    const double lambda =
        preset == "lognormal" ? 0.0 : (j.contains("lambda") ? number(j["lambda"], "lambda") : 0.0);
    return DensityMeasure1D::stieltjes(lambda, spec);
  }
  throw ParseError("unknown density preset '" + preset + "'");
}

json to_json(const MomentTable& t) {
  json entries = json::array();
  for (int m = 0; m <= t.degree(); ++m)
    for (int n = 0; n <= t.degree(); ++n)
      entries.push_back({m, n, t(m, n).real(), t(m, n).imag()});
  return {{"degree", t.degree()}, {"entries", entries}};
}

MomentTable table_from_json(const json& j) {
  check_keys(j, {"degree", "entries"}, {"degree", "entries"}, "moment table");
  const int d = integer(j["degree"], "degree");
  if (d < 0) throw ParseError("degree must be nonnegative");
  MomentTable t(d);
  std::vector<char> seen(static_cast<std::size_t>(d + 1) * (d + 1), 0);
  for (const auto& e : array_field(j, "entries")) {
    if (!e.is_array() || e.size() != 4) throw ParseError("table entries are [m, n, re, im]");
    const int m = integer(e[0], "m"), n = integer(e[1], "n");
    if (m < 0 || n < 0 || m > d || n > d) throw ParseError("table entry index out of range");
    t(m, n) = Complex(number(e[2], "re"), number(e[3], "im"));
    seen[static_cast<std::size_t>(m) * (d + 1) + n] = 1;
  }
  for (int m = 0; m <= d; ++m)
    for (int n = 0; n <= d; ++n) {
      if (seen[static_cast<std::size_t>(m) * (d + 1) + n]) continue;
      if (!seen[static_cast<std::size_t>(n) * (d + 1) + m])
        throw ParseError("table entry (" + std::to_string(m) + "," + std::to_string(n) +
                         ") and its mirror are both missing");
      t(m, n) = std::conj(t(n, m));
    }
  return t;
}

json to_json(const ExtendedMomentTable& t) {
  json entries = json::array();
  for (const Index2 ix : t.indices())
    entries.push_back({ix.m, ix.n, t(ix.m, ix.n).real(), t(ix.m, ix.n).imag()});
  return {{"window", t.window()}, {"entries", entries}};
}

ExtendedMomentTable extended_from_json(const json& j) {
  check_keys(j, {"window", "entries"}, {"window", "entries"}, "extended table");
  const int w = integer(j["window"], "window");
  if (w < 0) throw ParseError("window must be nonnegative");
  ExtendedMomentTable t(w);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : array_field(j, "entries")) {
    if (!e.is_array() || e.size() != 4) throw ParseError("table entries are [m, n, re, im]");
    const int m = integer(e[0], "m"), n = integer(e[1], "n");
    if (!t.contains(m, n)) throw ParseError("extended entry index outside the window");
    t(m, n) = Complex(number(e[2], "re"), number(e[3], "im"));
    seen.insert({m, n});
  }
  for (const Index2 ix : t.indices()) {
    if (seen.count({ix.m, ix.n})) continue;
    if (!seen.count({ix.n, ix.m}))
      throw ParseError("extended entry (" + std::to_string(ix.m) + "," + std::to_string(ix.n) +
                       ") and its mirror are both missing");
    t(ix.m, ix.n) = std::conj(t(ix.n, ix.m));
  }
  return t;
}

json to_json(const HamburgerTable& s) {
  json values = json::array(), exact = json::array();
  for (const auto& v : s.s) {
    values.push_back(static_cast<double>(v));
    exact.push_back(real_string(v));
  }
  return {{"moments", values}, {"moments_exact", exact}};
}

HamburgerTable hamburger_from_json(const json& j) {
  check_keys(j, {"moments", "moments_exact"}, {}, "Hamburger sequence");
  const char* key = j.contains("moments_exact") ? "moments_exact" : "moments";
  if (!j.contains(key)) throw ParseError("Hamburger sequence: missing field 'moments'");
  HamburgerTable s;
  for (const auto& v : array_field(j, key)) s.s.push_back(real_value(v));
  if (s.s.empty()) throw ParseError("Hamburger sequence is empty");
  return s;
}

json to_json(const HerglotzTable& s) {
  json entries = json::array();
  for (int n = -s.degree(); n <= s.degree(); ++n)
    entries.push_back({n, s[n].real(), s[n].imag()});
  return {{"degree", s.degree()}, {"entries", entries}};
}

HerglotzTable herglotz_from_json(const json& j) {
  check_keys(j, {"degree", "entries"}, {"degree", "entries"}, "Herglotz table");
  const int d = integer(j["degree"], "degree");
  if (d < 0) throw ParseError("degree must be nonnegative");
  HerglotzTable s(d);
  std::set<int> seen;
  for (const auto& e : array_field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("Herglotz entries are [n, re, im]");
    const int n = integer(e[0], "n");
    if (n < -d || n > d) throw ParseError("Herglotz entry index out of range");
    s[n] = Complex(number(e[1], "re"), number(e[2], "im"));
    seen.insert(n);
  }
  for (int n = -d; n <= d; ++n) {
    if (seen.count(n)) continue;
    if (!seen.count(-n))
      throw ParseError("Herglotz entry " + std::to_string(n) + " and its mirror are both missing");
    s[n] = std::conj(s[-n]);
  }
  return s;
}

json to_json(const RealMomentTable2D& a) {
  json entries = json::array();
  for (int k = 0; k <= a.degree(); ++k)
    for (int l = 0; l <= a.degree(); ++l)
      if (a.known(k, l)) entries.push_back({k, l, a(k, l)});
  return {{"degree", a.degree()}, {"entries", entries}};
}

RealMomentTable2D real2d_from_json(const json& j) {
  check_keys(j, {"degree", "entries"}, {"degree", "entries"}, "2-D table");
  const int d = integer(j["degree"], "degree");
  if (d < 0) throw ParseError("degree must be nonnegative");
  RealMomentTable2D a(d);
  for (const auto& e : array_field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("2-D entries are [k, l, value]");
    const int k = integer(e[0], "k"), l = integer(e[1], "l");
    if (k < 0 || l < 0 || k > d || l > d) throw ParseError("2-D entry index out of range");
    a.set(k, l, number(e[2], "value"));
  }
  return a;
}

json to_json(const HermitianMatrix& a) {
  json labels = json::array(), rows = json::array();
  for (const auto& ix : a.labels) labels.push_back({ix.m, ix.n});
  for (Eigen::Index i = 0; i < a.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < a.entries.cols(); ++k)
      row.push_back({a.entries(i, k).real(), a.entries(i, k).imag()});
    rows.push_back(row);
  }
  return {{"dimension", a.dimension()}, {"labels", labels}, {"entries", rows}};
}

json to_json(const PsdReport& r) {
  json out = {{"verdict", r.psd ? "psd" : "not-psd"},
              {"min_eigenvalue", r.min_eigenvalue},
              {"spectral_norm", r.spectral_norm},
              {"tolerance", r.tolerance}};
  if (r.witness) {
    json w = json::array();
    for (Eigen::Index i = 0; i < r.witness->size(); ++i)
      w.push_back({(*r.witness)(i).real(), (*r.witness)(i).imag()});
    out["witness"] = w;
  }
  return out;
}

json to_json(const FlatnessCertificate& c) {
  json out = {{"k", c.k},
              {"l", c.l},
              {"window", c.window},
              {"status", c.status == FlatnessStatus::confirmed_on_window ? "confirmed-on-window"
                                                                         : "violated"}};
  if (c.witness)
    out["witness"] = {{c.witness->first.m, c.witness->first.n},
                      {c.witness->second.m, c.witness->second.n}};
  return out;
}

json to_json(const ExtensionCheck& c) {
  json out = {{"extends", c.extends}, {"max_difference", c.max_difference}};
  if (c.witness) out["witness"] = {c.witness->m, c.witness->n};
  return out;
}

json to_json(const SupportClass& c) {
  json out = {{"kind", to_string(c.kind)}, {"zero_excluded", c.zero_excluded}};
  if (c.kind == SupportClass::Kind::zero_and_roots) out["r"] = c.r;
  return out;
}

SupportClass support_from_json(const json& j) {
  check_keys(j, {"kind", "r", "zero_excluded"}, {"kind"}, "support class");
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  SupportClass c;
  if (kind == "zero-and-roots") {
    c.kind = SupportClass::Kind::zero_and_roots;
    c.r = j.contains("r") ? integer(j["r"], "r") : 1;
    if (c.r < 1) throw DomainError("roots of unity need r >= 1");
  } else if (kind == "circle") {
    c.kind = SupportClass::Kind::circle;
    c.zero_excluded = true;
  } else if (kind == "real-line") {
    c.kind = SupportClass::Kind::real_line;
  } else {
    throw ParseError("unknown support class '" + kind + "'");
  }
  if (j.contains("zero_excluded")) {
    if (!j["zero_excluded"].is_boolean()) throw ParseError("zero_excluded must be boolean");
    c.zero_excluded = j["zero_excluded"].get<bool>();
  }
  return c;
}

json to_json(const InjectivityVerdict& v) {
  json out = {{"samples", v.samples},
              {"verdict", v.violated ? "violated" : "no-violation-found"}};
  if (v.witness) out["witness"] = {point_json(v.witness->first), point_json(v.witness->second)};
  return out;
}

json to_json(const Polynomial2& p) {
  json coeffs = json::array();
  for (const auto& [key, c] : p.coefficients()) coeffs.push_back({key.first, key.second, c});
  return coeffs;
}

json to_json(const ZariskiVerdict& v) {
  json out = {{"degree", v.degree},
              {"verdict", v.dense ? "dense-at-degree-d" : "annihilating-polynomial"},
              {"sigma_min", v.sigma_min},
              {"sigma_max", v.sigma_max}};
  if (v.annihilator) out["annihilator"] = to_json(*v.annihilator);
  return out;
}

json to_json(const QuasiDeterminacyResidual& r) {
  return {{"residual", r.max}, {"at", r.at}, {"per_order", r.per_order}};
}

json to_json(const QuadratureResult& r) {
  return {{"value", static_cast<double>(r.value)},
          {"value_exact", real_string(r.value)},
          {"error_estimate", static_cast<double>(r.error_estimate)},
          {"subdivisions", r.subdivisions}};
}

json to_json(const Dc1Report& r) {
  json checks = json::array();
  for (const auto* c : {&r.shared_moments, &r.no_mass_on_axis, &r.zariski_dense})
    checks.push_back(
        {{"name", c->name}, {"passed", c->passed}, {"value", c->value}, {"detail", c->detail}});
  return {{"degree", r.degree},
          {"zariski_degree", r.zariski_degree},
          {"passed", r.passed()},
          {"checks", checks}};
}

json to_json(const JacobiMatrix& j) {
  json a = json::array(), b = json::array();
  for (const auto& v : j.alpha) a.push_back(static_cast<double>(v));
  for (const auto& v : j.beta) b.push_back(static_cast<double>(v));
  return {{"alpha", a}, {"beta", b}};
}

json to_json(const Curve& c) {
  json params = json::object();
  for (const auto& [key, v] : c.params) params[key] = v;
  return {{"name", c.name}, {"coeffs", to_json(c.implicit)}, {"params", params}};
}

Curve curve_from_json(const json& j) {
  check_keys(j, {"name", "coeffs", "params"}, {}, "curve");
  const std::string name =
      j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  std::map<std::string, double> params;
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ParseError("curve params must be an object");
    for (const auto& [key, v] : j["params"].items()) params[key] = number(v, "curve param");
  }
  std::optional<Polynomial2> coeffs;
  if (j.contains("coeffs")) {
    std::map<std::pair<int, int>, double> terms;
    for (const auto& e : array_field(j, "coeffs")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("curve coeffs are [i, j, c]");
      terms[{integer(e[0], "i"), integer(e[1], "j")}] += number(e[2], "coefficient");
    }
    coeffs = Polynomial2(terms);
  }
  static const std::set<std::string> catalog = {"line",    "neil",        "agnesi",  "cissoid",
                                                "power",   "unit-circle", "parabola"};
  if (catalog.count(name)) {
    Curve c = curves::from_name(name, params);
    if (coeffs) {
      const auto& want = c.implicit.coefficients();
      const auto& got = coeffs->coefficients();
      const double scale = 1e-12 * (1.0 + c.implicit.coefficient_norm());
      bool same = want.size() == got.size();
      for (const auto& [key, v] : want) {
        auto it = got.find(key);
        same = same && it != got.end() && std::abs(it->second - v) <= scale;
      }
      if (!same) throw InvariantError("coefficients do not match catalog curve '" + name + "'");
    }
    return c;
  }
  if (!coeffs) throw ParseError("curve needs coeffs or a catalog name");
  Curve c;
  c.name = name.empty() ? "implicit" : name;
  c.implicit = *coeffs;
  c.params = params;
  return c;
}

}  // namespace cmoment::io

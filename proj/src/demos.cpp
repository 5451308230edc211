#include "cmoment/demos.hpp"

#include <cmath>

#include "cmoment/error.hpp"

namespace cmoment::demos {

namespace {

using io::json;

class Checks {
 public:
  void add(const std::string& name, bool passed, double value, const std::string& detail = {}) {
    json c = {{"name", name}, {"passed", passed}, {"value", value}};
    if (!detail.empty()) c["detail"] = detail;
    list_.push_back(c);
    all_ = all_ && passed;
  }
  bool all() const { return all_; }
  const json& list() const { return list_; }

 private:
  json list_ = json::array();
  bool all_ = true;
};

json finish(const std::string& name, const std::string& anchor, const Checks& checks,
            json data) {
  return {{"demo", name},
          {"anchor", anchor},
          {"passed", checks.all()},
          {"checks", checks.list()},
          {"data", std::move(data)}};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

double table_difference(const ExtendedMomentTable& a, const ExtendedMomentTable& b) {
  double worst = 0.0;
  for (const Index2 ix : a.indices())
    worst = std::max(worst, std::abs(a(ix.m, ix.n) - b(ix.m, ix.n)));
  return worst;
}

// Largest |gamma_a - gamma_b| over entries with m + n <= order.
double quadrant_difference(const MomentTable& a, const MomentTable& b, int order) {
  double worst = 0.0;
  for (int m = 0; m <= a.degree(); ++m)
    for (int n = 0; n <= a.degree() && m + n <= order; ++n)
      worst = std::max(worst, std::abs(a(m, n) - b(m, n)));
  return worst;
}

// Largest |gamma_a - gamma_b| over entries with m + n == order.
double diagonal_difference(const MomentTable& a, const MomentTable& b, int order) {
  double worst = 0.0;
  for (int m = 0; m <= order; ++m)
    if (m <= a.degree() && order - m <= a.degree())
      worst = std::max(worst, std::abs(a(m, order - m) - b(m, order - m)));
  return worst;
}

// sum w (z / zbar)^m over the atoms of mu (no atom at 0).
Complex psi_moment(const DiscreteMeasure& mu, int m) {
  Complex total = 0.0;
  for (const auto& a : mu.atoms()) {
    const Complex u = a.location / std::conj(a.location);
    total += a.weight * std::pow(u, m);
  }
  return total;
}

json snu2(const DemoOptions& opt) {
  const int w = opt.window.value_or(4);
  const DiscreteMeasure mu = DiscreteMeasure::dirac(0.0);
  const double alpha = mu.mass_at(0.0);
  const ExtendedMomentTable big = snu2_family(mu, opt.t, w);
  const MomentTable gamma = discrete_moments(mu, w);

  Checks checks;
  const ExtensionCheck ext = is_extension(big, gamma);
  checks.add("restricts to the moments of mu", ext.extends, ext.max_difference);

  const Complex expected = psi_moment(mu.without(0.0), 1) + alpha * (2.0 * opt.t - 1.0);
  const double err = std::abs(big(1, -1) - expected);
  checks.add("entry (1,-1) equals the hand evaluation", err <= 1e-12, err);

  const double gap = std::abs(snu2_family(mu, 1.0, w)(1, -1) - snu2_family(mu, 0.0, w)(1, -1));
  checks.add("endpoint tables differ at (1,-1) by 2 alpha", std::abs(gap - 2 * alpha) <= 1e-12,
             gap);

  const PsdReport psd = is_psd(moment_matrix_halfplane(big, w / 2));
  checks.add("half-plane moment matrix is psd", psd.psd, psd.min_eigenvalue);

  return finish("snu2",
                "an atom at the origin gives a convex family of distinct positive definite "
                "extensions of one moment table",
                checks,
                {{"t", opt.t},
                 {"alpha", alpha},
                 {"entry_1_-1", complex_json(big(1, -1))},
                 {"table", io::to_json(big)}});
}

json null_scenario(const DemoOptions& opt) {
  const int w = opt.window.value_or(6);
  const DiscreteMeasure mu = DiscreteMeasure::dirac(2.0);
  std::vector<Atom> uniform;
  for (int k = 0; k < 64; ++k) {
    const double theta = 2.0 * M_PI * k / 64.0;
    uniform.push_back({std::polar(1.0, theta), 1.0 / 64.0});
  }
  const std::vector<std::pair<std::string, DiscreteMeasure>> profiles = {
      {"delta_1", DiscreteMeasure::dirac(1.0, Domain::unit_circle)},
      {"delta_i", DiscreteMeasure::dirac(Complex(0, 1), Domain::unit_circle)},
      {"uniform_64", DiscreteMeasure(Domain::unit_circle, uniform)}};

  std::vector<ExtendedMomentTable> tables;
  for (const auto& [name, profile] : profiles)
    tables.push_back(build_extension(measure_to_pair(mu, profile), w));

  double worst = 0.0;
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      worst = std::max(worst, table_difference(tables[i], tables[j]));

  Checks checks;
  checks.add("every profile gives the same extension", worst <= 1e-12, worst);
  const ExtensionCheck ext = is_extension(tables.front(), discrete_moments(mu, w));
  checks.add("the extension restricts to the moments of mu", ext.extends, ext.max_difference);
  const QuasiDeterminacyResidual res =
      quasi_det_residual(measure_to_pair(mu, profiles[0].second),
                         measure_to_pair(mu, profiles[1].second), w);
  checks.add("transported measures agree", res.max <= 1e-12, res.max);

  json names = json::array();
  for (const auto& p : profiles) names.push_back(p.first);
  return finish("null",
                "without an atom at the origin every circle profile yields the same extension",
                checks,
                {{"window", w},
                 {"profiles", names},
                 {"max_difference", worst},
                 {"table", io::to_json(tables.front())}});
}

json ham_c(const DemoOptions&) {
  const DiscreteMeasure tau(Domain::real_line, {{Complex(-1.2, 0), 0.1},
                                                {Complex(0.3, 0), 0.4},
                                                {Complex(0.9, 0), 0.3},
                                                {Complex(2.1, 0), 0.2}});
  const int d = 4;
  const MomentTable gamma = from_hamburger(real_moments(tau, 2 * d), d);
  const MomentTable direct = discrete_moments(tau, d);
  const double scale = 1.0 + direct.max_abs();

  Checks checks;
  const double diff = quadrant_difference(gamma, direct, 2 * d) / scale;
  checks.add("Hamburger embedding equals the complex moments of tau", diff <= 1e-12, diff);
  const FlatnessCertificate flat = check_flatness(gamma, 1, 1);
  checks.add("embedded sequence is (1,1)-flat on the window",
             flat.status == FlatnessStatus::confirmed_on_window, 0.0);
  checks.add("(1,1)-flatness forces support in the real line",
             classify_flat_support(1, 1).kind == SupportClass::Kind::real_line, 0.0);
  const PsdReport psd = is_psd(moment_matrix_quadrant(gamma, d / 2));
  checks.add("quadrant moment matrix is psd", psd.psd, psd.min_eigenvalue);

  const DiscreteMeasure nu(Domain::unit_circle, {{std::polar(1.0, 0.4), 0.5},
                                                 {std::polar(1.0, 2.0), 0.3},
                                                 {std::polar(1.0, -2.5), 0.2}});
  const MomentTable herg = from_herglotz(trig_moments(nu, d), d);
  const double hdiff = quadrant_difference(herg, discrete_moments(nu, d), 2 * d);
  checks.add("Herglotz embedding equals the complex moments of nu", hdiff <= 1e-12, hdiff);
  const FlatnessCertificate circ = check_flatness(herg, 1, -1);
  checks.add("embedded trigonometric sequence is (1,-1)-flat",
             circ.status == FlatnessStatus::confirmed_on_window, 0.0);
  checks.add("(1,-1)-flatness forces support in the unit circle",
             classify_flat_support(1, -1).kind == SupportClass::Kind::circle, 0.0);

  return finish("ham-c",
                "Hamburger and Herglotz sequences embed as (1,1)- and (1,-1)-flat complex "
                "moment sequences",
                checks,
                {{"tau", io::to_json(tau)},
                 {"table", io::to_json(gamma)},
                 {"nu", io::to_json(nu)},
                 {"herglotz_table", io::to_json(herg)}});
}

json no_atom(const DemoOptions&) {
  const ShiftedPair p = shifted_gauss_pair();
  const ZPolynomial line = horizontal_line_polynomial();
  const int d = p.shared_order + 1;
  const MomentTable g1 = discrete_moments(p.mu1, d);
  const MomentTable g2 = discrete_moments(p.mu2, d);
  const double scale = 1.0 + std::max(g1.max_abs(), g2.max_abs());

  Checks checks;
  const double loc = std::max(localization_residual(p.mu1, line),
                              localization_residual(p.mu2, line));
  checks.add("both measures live on R + i", loc <= 1e-12, loc);
  const double shared = quadrant_difference(g1, g2, p.shared_order) / scale;
  checks.add("quadrant moments agree through the shared order", shared <= 1e-10, shared);
  const double beyond = diagonal_difference(g1, g2, p.shared_order + 1);
  checks.add("quadrant moments differ at the next order", beyond > 1e-6, beyond);
  checks.add("the measures differ", !approx_equal(p.mu1, p.mu2), max_atom_discrepancy(p.mu1, p.mu2));
  checks.add("no atom at the origin", p.mu1.mass_at(0.0) == 0.0 && p.mu2.mass_at(0.0) == 0.0, 0.0);

  return finish("no-atom",
                "measures on the line R + i sharing truncated complex moments need not agree",
                checks,
                {{"shared_order", p.shared_order},
                 {"mu1", io::to_json(p.mu1)},
                 {"mu2", io::to_json(p.mu2)}});
}

json dc1(const DemoOptions&) {
  const Dc1Configuration cfg = dc1_example();
  const Dc1Report report =
      dc1_property_suite(cfg.mu, cfg.nu1, cfg.nu2, cfg.degree, cfg.zariski_degree);
  Checks checks;
  for (const auto* c : {&report.shared_moments, &report.no_mass_on_axis, &report.zariski_dense})
    checks.add(c->name, c->passed, c->value, c->detail);
  return finish("dc1",
                "product measures sharing two-dimensional moments, without mass on {0} x R, "
                "with Zariski dense supports",
                checks,
                {{"mu", io::to_json(cfg.mu)},
                 {"nu1", io::to_json(cfg.nu1)},
                 {"nu2", io::to_json(cfg.nu2)},
                 {"report", io::to_json(report)}});
}

json agnesi(const DemoOptions&) {
  const double a = 1.0, b = 1.0;
  const Curve witch = curves::agnesi(a, b);
  Checks checks;

  json fibers = json::array();
  std::vector<Atom> atoms;
  const std::vector<std::pair<double, std::size_t>> levels = {{1.0, 1}, {0.5, 2}, {0.2, 2}};
  bool counts = true, symmetric = true;
  for (const auto& [y, expected] : levels) {
    const auto pts = agnesi_fiber(a, b, y);
    counts = counts && pts.size() == expected;
    if (pts.size() == 2) symmetric = symmetric && std::abs(pts[1] + std::conj(pts[0])) <= 1e-12;
    json f = json::array();
    for (Complex z : pts) {
      f.push_back(io::point_json(z));
      atoms.push_back({z, 1.0});
    }
    fibers.push_back({{"y", y}, {"points", f}});
  }
  checks.add("fibers have the expected sizes", counts, 0.0);
  checks.add("two-point fibers are {z, -conj z}", symmetric, 0.0);

  // y_n = b / (n^2 + a) puts fiber points at x = +-n, so Re z_n increases without bound.
  json sequence = json::array();
  double prev = -1.0;
  bool increasing = true;
  for (int n = 0; n <= 6; ++n) {
    const double y = b / (n * n + a);
    const Complex z = agnesi_fiber(a, b, y).back();
    const double x = std::abs(z.real());
    increasing = increasing && x > prev;
    prev = x;
    sequence.push_back(io::point_json(Complex(x, z.imag())));
    for (Complex w : agnesi_fiber(a, b, y)) atoms.push_back({w, 1.0});
  }
  checks.add("Re z_n increases along the fiber sequence", increasing, prev);

  const DiscreteMeasure mu(Domain::complex_plane, atoms);
  const DiscreteMeasure normalized = mu.scaled(1.0 / mu.total_mass());
  const double loc = localization_residual(normalized, witch);
  checks.add("the fiber measure lives on the curve", loc <= 1e-12, loc);
  const InjectivityVerdict inj = psi_injectivity_sample_test(witch, 500);
  checks.add("z / conj z is injective on the sampled curve", !inj.violated, inj.samples);

  return finish("agnesi",
                "horizontal fibers of the Witch of Agnesi are pairs {z, -conj z} escaping "
                "to infinity",
                checks,
                {{"a", a},
                 {"b", b},
                 {"fibers", fibers},
                 {"sequence", sequence},
                 {"measure", io::to_json(normalized)}});
}

json zero_not_atom(const DemoOptions& opt) {
  const int w = opt.window.value_or(4);
  const ShiftedPair p = shifted_gauss_pair();
  const ExtendedMomentTable big1 = build_extension(RepresentingPair(p.mu1, DiscreteMeasure(Domain::unit_circle)), w);
  const ExtendedMomentTable big2 = build_extension(RepresentingPair(p.mu2, DiscreteMeasure(Domain::unit_circle)), w);

  Checks checks;
  const InjectivityVerdict inj = psi_injectivity_sample_test(curves::line(0, 1, 1), 500);
  checks.add("z / conj z is injective on the sampled line y = 1", !inj.violated, inj.samples);

  double oracle = 0.0, gap = 0.0;
  int at = 0;
  for (int m = -w; m <= w; ++m) {
    oracle = std::max({oracle, std::abs(big1(m, -m) - psi_moment(p.mu1, m)),
                       std::abs(big2(m, -m) - psi_moment(p.mu2, m))});
    const double g = std::abs(big1(m, -m) - big2(m, -m));
    if (g > gap) {
      gap = g;
      at = m;
    }
  }
  checks.add("anti-diagonal entries match the transported moments", oracle <= 1e-12, oracle);
  checks.add("the extensions differ on the anti-diagonal", gap > 1e-6, gap);
  const double shared =
      quadrant_difference(restrict(big1), restrict(big2), std::min(p.shared_order, w));
  checks.add("the quadrant moments agree through the shared order", shared <= 1e-10, shared);

  return finish("0notatom",
                "distinct measures on a curve where z / conj z is injective give distinct "
                "extensions",
                checks,
                {{"window", w},
                 {"max_antidiagonal_difference", gap},
                 {"at", json::array({at, -at})},
                 {"mu1", io::to_json(p.mu1)},
                 {"mu2", io::to_json(p.mu2)}});
}

}  // namespace

ShiftedPair shifted_gauss_pair(int nodes) {
  if (nodes < 1 || nodes > 4) throw RangeError("Gauss compression needs 1 to 4 nodes here");
  ShiftedPair p;
  p.nodes = nodes;
  p.shared_order = 2 * nodes - 1;
  p.tau1 = DiscreteMeasure(Domain::real_line, {{Complex(-2.0, 0), 0.15},
                                               {Complex(-0.7, 0), 0.25},
                                               {Complex(0.3, 0), 0.2},
                                               {Complex(1.1, 0), 0.25},
                                               {Complex(2.5, 0), 0.15}});
  PrecisionScope scope(kDefaultDigits);
  p.tau2 = recover_atomic(real_moments(p.tau1, 2 * nodes - 1), nodes);
  p.mu1 = shift_to_horizontal_line(p.tau1, 1.0).retagged(Domain::punctured_plane);
  p.mu2 = shift_to_horizontal_line(p.tau2, 1.0).retagged(Domain::punctured_plane);
  return p;
}

ZPolynomial horizontal_line_polynomial() {
  ZPolynomial p;
  p.coeffs[{1, 0}] = 1.0;
  p.coeffs[{0, 1}] = -1.0;
  p.coeffs[{0, 0}] = Complex(0.0, -2.0);
  return p;
}

std::vector<std::string> names() {
  return {"snu2", "null", "ham-c", "no-atom", "dc1", "agnesi", "0notatom"};
}

io::json run(const std::string& name, const DemoOptions& options) {
  if (options.window && *options.window < 1) throw RangeError("window must be at least 1");
  if (name == "snu2") return snu2(options);
  if (name == "null") return null_scenario(options);
  if (name == "ham-c") return ham_c(options);
  if (name == "no-atom") return no_atom(options);
  if (name == "dc1") return dc1(options);
  if (name == "agnesi") return agnesi(options);
  if (name == "0notatom") return zero_not_atom(options);
  throw DomainError("unknown demo '" + name + "'");
}

}  // namespace cmoment::demos

#include "cmoment/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "cmoment/error.hpp"
#include "cmoment/sequences.hpp"

namespace cmoment {

Polynomial2::Polynomial2(std::map<std::pair<int, int>, double> coeffs) {
  for (const auto& [key, c] : coeffs) {
    if (key.first < 0 || key.second < 0)
      throw DomainError("polynomial exponents must be nonnegative");
    if (!std::isfinite(c)) throw DomainError("polynomial coefficients must be finite");
    if (c != 0.0) coeffs_.emplace(key, c);
  }
}

double Polynomial2::operator()(double x, double y) const {
  double sum = 0.0;
  for (const auto& [key, c] : coeffs_)
    sum += c * std::pow(x, key.first) * std::pow(y, key.second);
  return sum;
}

double Polynomial2::coefficient_norm() const {
  double s = 0.0;
  for (const auto& [key, c] : coeffs_) s += std::abs(c);
  return s;
}

Complex ZPolynomial::operator()(Complex z) const {
  Complex sum = 0.0;
  for (const auto& [key, c] : coeffs)
    sum += c * std::pow(z, key.first) * std::pow(std::conj(z), key.second);
  return sum;
}

std::pair<Polynomial2, Polynomial2> ZPolynomial::real_form() const {
  std::map<std::pair<int, int>, double> re, im;
  for (const auto& [key, c] : coeffs) {
    const BinaryForm alpha = complex_monomial_in_xy(key.first, key.second);
    const int t = key.first + key.second;
    for (int j = 0; j <= t; ++j) {
      const Complex term =
          c * Complex(static_cast<double>(alpha[j].re), static_cast<double>(alpha[j].im));
      re[{t - j, j}] += term.real();
      im[{t - j, j}] += term.imag();
    }
  }
  return {Polynomial2(re), Polynomial2(im)};
}

std::vector<Complex> Curve::sample(int n) const {
  if (!parameterization) throw DomainError("curve '" + name + "' has no parameterization");
  if (n < 1) throw RangeError("sample count must be positive");
  const auto& par = *parameterization;
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = par.t_lo + (par.t_hi - par.t_lo) * (j + par.sample_offset) / n;
    pts.push_back(par.point(t));
  }
  return pts;
}

double Curve::parameter_residual(int samples) const {
  double worst = 0.0;
  const double scale = 1.0 + implicit.coefficient_norm();
  for (Complex z : sample(samples))
    worst = std::max(worst, std::abs(implicit(z.real(), z.imag())) / scale);
  return worst;
}

namespace curves {

namespace {

using Terms = std::map<std::pair<int, int>, double>;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Real l-th root with the sign of v (l odd).
double odd_root(double v, int l) {
  return std::copysign(std::pow(std::abs(v), 1.0 / l), v);
}

bool is_integer(double v) { return std::floor(v) == v; }

double param(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("missing curve parameter '" + key + "'");
  return it->second;
}

}  // namespace

Curve line(double a, double b, double c) {
  if (!(a * a + b * b > 0.0)) throw DomainError("line needs a^2 + b^2 > 0");
  if (c == 0.0) throw DomainError("line through the origin is excluded (c != 0)");
  Curve cv;
  cv.name = "line";
  cv.params = {{"a", a}, {"b", b}, {"c", c}};
  cv.implicit = Polynomial2(Terms{{{1, 0}, a}, {{0, 1}, b}, {{0, 0}, -c}});
  const double nn = a * a + b * b, len = std::sqrt(nn);
  const Complex foot(c * a / nn, c * b / nn), dir(-b / len, a / len);
  cv.parameterization = Parameterization{[=](double t) { return foot + t * dir; }, -10.0, 10.0, 0.0};
  return cv;
}

Curve neil(int k, int l, double a, double y0) {
  if (k < 0) throw DomainError("neil needs k >= 0");
  if (l <= 2 * k || l % 2 == 0) throw DomainError("neil needs odd l > 2k");
  if (!(a > 0.0) || !(y0 > 0.0)) throw DomainError("neil needs a > 0 and y0 > 0");
  Curve cv;
  cv.name = "neil";
  cv.params = {{"k", k}, {"l", l}, {"a", a}, {"y0", y0}};
  Terms t;
  for (int j = 0; j <= l; ++j)
    t[{0, j}] += binomial(l, j) * std::pow(-y0, l - j);
  t[{2 * k, 0}] -= a;
  cv.implicit = Polynomial2(t);
  cv.parameterization = Parameterization{
      [=](double x) { return Complex(x, y0 + odd_root(a * std::pow(x, 2 * k), l)); },
      -3.0, 3.0, 0.0};
  return cv;
}

Curve agnesi(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("witch of Agnesi needs a, b > 0");
  Curve cv;
  cv.name = "agnesi";
  cv.params = {{"a", a}, {"b", b}};
  cv.implicit = Polynomial2(Terms{{{2, 1}, 1.0}, {{0, 1}, a}, {{0, 0}, -b}});
  cv.parameterization =
      Parameterization{[=](double x) { return Complex(x, b / (x * x + a)); }, -5.0, 5.0, 0.0};
  return cv;
}

Curve cissoid(double a, double x0) {
  if (!(a > 0.0) || !(x0 > 0.0)) throw DomainError("cissoid needs a > 0 and x0 > 0");
  Curve cv;
  cv.name = "cissoid";
  cv.params = {{"a", a}, {"x0", x0}};
  // u^3 + u y^2 - 2a y^2 with u = x - x0
  cv.implicit = Polynomial2(Terms{{{3, 0}, 1.0},
                                  {{2, 0}, -3.0 * x0},
                                  {{1, 0}, 3.0 * x0 * x0},
                                  {{0, 0}, -x0 * x0 * x0},
                                  {{1, 2}, 1.0},
                                  {{0, 2}, -x0 - 2.0 * a}});
  // polar about (x0, 0): r = 2a sin^2(theta) / cos(theta)
  cv.parameterization = Parameterization{
      [=](double th) {
        const double s = std::sin(th);
        return Complex(x0 + 2.0 * a * s * s, 2.0 * a * s * s * s / std::cos(th));
      },
      -1.4, 1.4, 0.0};
  return cv;
}

Curve power_curve(int k, int l, double a) {
  if (k < 0) throw DomainError("power curve needs k >= 0");
  if (l <= 0 || l % 2 == 0) throw DomainError("power curve needs odd l > 0");
  if (a == 0.0) throw DomainError("power curve needs a != 0");
  Curve cv;
  cv.name = "power";
  cv.params = {{"k", k}, {"l", l}, {"a", a}};
  cv.implicit = Polynomial2(Terms{{{2 * k, l}, 1.0}, {{0, 0}, -a}});
  // t = 0 is a pole when k > 0; the half-step offset keeps samples off it.
  cv.parameterization = Parameterization{
      [=](double x) { return Complex(x, odd_root(a / std::pow(x, 2 * k), l)); }, -4.0, 4.0,
      k > 0 ? 0.5 : 0.0};
  return cv;
}

Curve unit_circle() {
  Curve cv;
  cv.name = "unit-circle";
  cv.implicit = Polynomial2(Terms{{{2, 0}, 1.0}, {{0, 2}, 1.0}, {{0, 0}, -1.0}});
  cv.parameterization = Parameterization{
      [](double th) { return Complex(std::cos(th), std::sin(th)); }, 0.0,
      2.0 * std::numbers::pi, 0.0};
  return cv;
}

Curve parabola() {
  Curve cv;
  cv.name = "parabola";
  cv.implicit = Polynomial2(Terms{{{0, 1}, 1.0}, {{2, 0}, -1.0}, {{0, 0}, -1.0}});
  cv.parameterization =
      Parameterization{[](double x) { return Complex(x, x * x + 1.0); }, 0.5, 3.0, 0.0};
  return cv;
}

Curve from_name(const std::string& name, const std::map<std::string, double>& p) {
  auto integer = [&](const std::string& key) {
    const double v = param(p, key);
    if (!is_integer(v)) throw DomainError("curve parameter '" + key + "' must be an integer");
    return static_cast<int>(v);
  };
  if (name == "line") return line(param(p, "a"), param(p, "b"), param(p, "c"));
  if (name == "neil")
    return neil(integer("k"), integer("l"), param(p, "a"), param(p, "y0"));
  if (name == "agnesi") return agnesi(param(p, "a"), param(p, "b"));
  if (name == "cissoid") return cissoid(param(p, "a"), param(p, "x0"));
  if (name == "power") return power_curve(integer("k"), integer("l"), param(p, "a"));
  if (name == "unit-circle") return unit_circle();
  if (name == "parabola") return parabola();
  throw DomainError("unknown catalog curve '" + name + "'");
}

}  // namespace curves

std::vector<Curve> curve_catalog() {
  return {curves::line(0.0, 1.0, 1.0), curves::neil(1, 3, 1.0, 1.0),
          curves::agnesi(1.0, 1.0),    curves::cissoid(1.0, 1.0),
          curves::power_curve(1, 1, 1.0), curves::unit_circle(),
          curves::parabola()};
}

double localization_residual(const DiscreteMeasure& mu, const Polynomial2& p) {
  double sum = 0.0;
  for (const auto& a : mu.atoms()) {
    const double v = p(a.location.real(), a.location.imag());
    sum += a.weight * v * v;
  }
  return sum;
}

double localization_residual(const DiscreteMeasure& mu, const Curve& curve) {
  return localization_residual(mu, curve.implicit);
}

double localization_residual(const DiscreteMeasure& mu, const ZPolynomial& p) {
  double sum = 0.0;
  for (const auto& a : mu.atoms()) sum += a.weight * std::norm(p(a.location));
  return sum;
}

const char* to_string(SupportClass::Kind kind) noexcept {
  switch (kind) {
    case SupportClass::Kind::zero_and_roots: return "zero-and-roots";
    case SupportClass::Kind::circle: return "circle";
    case SupportClass::Kind::real_line: return "real-line";
  }
  return "real-line";
}

SupportClass classify_flat_support(int k, int l) {
  using Kind = SupportClass::Kind;
  if (k < 0) throw DomainError("flatness pairs have k >= 0");
  if (k == 0 && l == 0) return {Kind::zero_and_roots, 1, true};
  if (k == l) return {Kind::real_line, 1, false};
  if (k == -l) return {Kind::circle, 1, true};
  return {Kind::zero_and_roots, std::abs(k + l), l <= 0};
}

std::pair<int, int> flatness_for_support(const SupportClass& cls) {
  switch (cls.kind) {
    case SupportClass::Kind::zero_and_roots:
      if (cls.r < 1) throw DomainError("roots of unity need r >= 1");
      return cls.r == 1 ? std::pair{1, 1} : std::pair{1, cls.r - 1};
    case SupportClass::Kind::circle: return {1, -1};
    case SupportClass::Kind::real_line: return {1, 1};
  }
  return {1, 1};
}

bool support_contains(const SupportClass& outer, const SupportClass& inner) {
  using Kind = SupportClass::Kind;
  switch (outer.kind) {
    case Kind::real_line:
      return inner.kind == Kind::real_line ||
             (inner.kind == Kind::zero_and_roots && inner.r <= 2);
    case Kind::circle:
      return inner.kind == Kind::circle ||
             (inner.kind == Kind::zero_and_roots && inner.zero_excluded);
    case Kind::zero_and_roots:
      return inner.kind == Kind::zero_and_roots && outer.r % inner.r == 0 &&
             (inner.zero_excluded || !outer.zero_excluded);
  }
  return false;
}

bool collinear_through_origin(Complex z1, Complex z2) {
  if (std::abs(z1) <= kMergeTolerance || std::abs(z2) <= kMergeTolerance)
    throw DomainError("collinearity through the origin needs nonzero points");
  return std::abs((z1 * std::conj(z2)).imag()) <= 1e-10 * std::abs(z1) * std::abs(z2);
}

InjectivityVerdict psi_injectivity_sample_test(const Curve& curve, int samples) {
  const std::vector<Complex> pts = curve.sample(samples);
  for (Complex z : pts)
    if (std::abs(z) <= kMergeTolerance)
      throw DomainError("curve '" + curve.name + "' passes through the origin");
  InjectivityVerdict v;
  v.samples = samples;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double tol =
          kMergeTolerance * (1.0 + std::max(std::abs(pts[i]), std::abs(pts[j])));
      if (std::abs(pts[i] - pts[j]) <= tol) continue;
      if (collinear_through_origin(pts[i], pts[j])) {
        v.violated = true;
        v.witness = std::make_pair(pts[i], pts[j]);
        return v;
      }
    }
  return v;
}

std::vector<Complex> agnesi_fiber(double a, double b, double y) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("witch of Agnesi needs a, b > 0");
  if (!(y > 0.0) || y > b / a) throw DomainError("fiber height must lie in (0, b/a]");
  const double x2 = b / y - a;
  if (x2 <= 0.0) return {Complex(0.0, y)};
  const double x = std::sqrt(x2);
  return {Complex(x, y), Complex(-x, y)};
}

DiscreteMeasure marginal_transport(const DiscreteMeasure& rho, int axis) {
  if (rho.domain() != Domain::real_plane)
    throw DomainError("marginal_transport needs a real-plane measure");
  if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2");
  std::vector<Atom> out;
  for (const auto& a : rho.atoms())
    out.push_back({Complex(axis == 1 ? a.location.real() : a.location.imag(), 0.0), a.weight});
  return DiscreteMeasure(Domain::real_line, std::move(out));
}

ZariskiVerdict zariski_density_test(const std::vector<Complex>& points, int d) {
  if (d < 0) throw RangeError("degree must be nonnegative");
  const int monomials = (d + 1) * (d + 2) / 2;
  if (static_cast<int>(points.size()) < monomials)
    throw RangeError("degree " + std::to_string(d) + " needs at least " +
                     std::to_string(monomials) + " points");
  // Columns: total degree t ascending, then y power ascending.
  std::vector<std::pair<int, int>> exps;
  for (int t = 0; t <= d; ++t)
    for (int j = 0; j <= t; ++j) exps.emplace_back(t - j, j);
  Eigen::MatrixXd v(static_cast<Eigen::Index>(points.size()), monomials);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (int c = 0; c < monomials; ++c)
      v(static_cast<Eigen::Index>(i), c) = std::pow(points[i].real(), exps[c].first) *
                                           std::pow(points[i].imag(), exps[c].second);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(v, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  ZariskiVerdict out;
  out.degree = d;
  out.sigma_max = sv(0);
  out.sigma_min = sv(monomials - 1);
  out.dense = out.sigma_min > 1e-8 * out.sigma_max;
  if (out.dense) return out;

  Eigen::VectorXd kernel = svd.matrixV().col(monomials - 1);
  // Scale so the largest coefficient (last one on ties) becomes 1.
  int lead = 0;
  const double top = kernel.cwiseAbs().maxCoeff();
  for (int c = 0; c < monomials; ++c)
    if (std::abs(kernel(c)) >= top * (1.0 - 1e-9)) lead = c;
  kernel /= kernel(lead);
  std::map<std::pair<int, int>, double> coeffs;
  for (int c = 0; c < monomials; ++c)
    if (std::abs(kernel(c)) > 1e-12) coeffs[exps[c]] = kernel(c);
  out.annihilator = Polynomial2(coeffs);
  return out;
}

}  // namespace cmoment

#include "cmoment/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cmoment/error.hpp"

namespace cmoment {

namespace {

struct CholeskyAttempt {
  int rank = 0;  // number of accepted pivots
  JacobiMatrix jacobi;
};

CholeskyAttempt cholesky_recurrence(const HamburgerTable& s, int n, double tol) {
  const int size = n + 1;
  std::vector<std::vector<Real>> r(static_cast<std::size_t>(n),
                                   std::vector<Real>(static_cast<std::size_t>(size)));
  auto h = [&](int i, int j) { return at_working_precision(s.s[i + j]); };
  CholeskyAttempt out;
  for (int i = 0; i < n; ++i) {
    Real pivot = h(i, i);
    for (int k = 0; k < i; ++k) pivot -= r[k][i] * r[k][i];
    const Real diag = abs(h(i, i));
    if (!(diag > 0) || !(pivot > tol * diag)) return out;
    r[i][i] = sqrt(pivot);
    for (int j = i + 1; j < size; ++j) {
      Real v = h(i, j);
      for (int k = 0; k < i; ++k) v -= r[k][i] * r[k][j];
      r[i][j] = v / r[i][i];
    }
    out.rank = i + 1;
  }
  for (int j = 0; j < n; ++j) {
    Real a = r[j][j + 1] / r[j][j];
    if (j > 0) a -= r[j - 1][j] / r[j - 1][j - 1];
    out.jacobi.alpha.push_back(a);
    if (j > 0) out.jacobi.beta.push_back(r[j][j] / r[j - 1][j - 1]);
  }
  return out;
}

Real hypot_r(const Real& a, const Real& b) { return sqrt(a * a + b * b); }

}  // namespace

JacobiMatrix hankel_to_jacobi(const HamburgerTable& s, int n, const RecoveryOptions& opts) {
  if (n < 1) throw RangeError("recurrence order must be at least 1");
  if (s.length() < 2 * n - 1)
    throw RangeError("order " + std::to_string(n) + " needs moments s_0..s_" +
                     std::to_string(2 * n - 1));
  unsigned input_digits = opts.digits;
  for (const auto& v : s.s) input_digits = std::min(input_digits, v.precision());
  const double tol = opts.rank_tolerance > 0.0
                         ? opts.rank_tolerance
                         : std::pow(10.0, -2.0 * input_digits / 3.0);
  CholeskyAttempt first;
  {
    PrecisionScope scope(opts.digits);
    first = cholesky_recurrence(s, n, tol);
  }
  if (first.rank == n) return first.jacobi;
  PrecisionScope wide(2 * opts.digits);
  CholeskyAttempt second = cholesky_recurrence(s, n, tol);
  if (second.rank == n) return second.jacobi;
  throw RankDeficientError("Hankel matrix has numerical rank " + std::to_string(second.rank) +
                               " < " + std::to_string(n),
                           second.rank);
}

GaussRule jacobi_to_rule(const JacobiMatrix& j, const Real& total_mass) {
  const int n = j.order();
  if (n < 1) throw DomainError("empty Jacobi matrix");
  if (static_cast<int>(j.beta.size()) != n - 1)
    throw DomainError("Jacobi matrix needs N-1 off-diagonal entries");
  for (const auto& b : j.beta)
    if (!(b > 0)) throw DomainError("Jacobi off-diagonal entries must be positive");

  std::vector<Real> d, e, z;
  for (const auto& a : j.alpha) d.push_back(at_working_precision(a));
  for (const auto& b : j.beta) e.push_back(at_working_precision(b));
  e.emplace_back(Real(0));
  z.assign(static_cast<std::size_t>(n), Real(0));
  z[0] = 1;
  const Real eps = pow(Real(10), 1 - static_cast<int>(working_digits()));

  // Implicit QL with Wilkinson shifts, tracking only the first row of the
  // eigenvector matrix.
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        const Real dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 100) throw NumericError("tridiagonal eigensolver did not converge");
      Real g = (d[l + 1] - d[l]) / (2 * e[l]);
      Real r = hypot_r(g, Real(1));
      g = d[m] - d[l] + e[l] / (g + (g >= 0 ? r : Real(-r)));
      Real s = 1, c = 1, p = 0;
      bool deflated = false;
      for (int i = m - 1; i >= l; --i) {
        const Real f = s * e[i], b = c * e[i];
        r = hypot_r(f, g);
        e[i + 1] = r;
        if (r == 0) {
          d[i + 1] -= p;
          e[m] = 0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        const Real fz = z[i + 1];
        z[i + 1] = s * z[i] + c * fz;
        z[i] = c * z[i] - s * fz;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  GaussRule rule;
  for (int i : order) {
    rule.nodes.push_back(d[i]);
    rule.weights.push_back(total_mass * z[i] * z[i]);
  }
  return rule;
}

DiscreteMeasure jacobi_to_atoms(const JacobiMatrix& j, double total_mass) {
  const GaussRule rule = jacobi_to_rule(j, Real(total_mass, working_digits()));
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    atoms.push_back({Complex(static_cast<double>(rule.nodes[i]), 0.0),
                     static_cast<double>(rule.weights[i])});
  return DiscreteMeasure(Domain::real_line, std::move(atoms));
}

DiscreteMeasure recover_atomic(const HamburgerTable& s, int n, const RecoveryOptions& opts) {
  const JacobiMatrix j = hankel_to_jacobi(s, n, opts);
  PrecisionScope scope(opts.digits);
  const GaussRule rule = jacobi_to_rule(j, at_working_precision(s.s[0]));
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    atoms.push_back({Complex(static_cast<double>(rule.nodes[i]), 0.0),
                     static_cast<double>(rule.weights[i])});
  return DiscreteMeasure(Domain::real_line, std::move(atoms));
}

namespace {

Real log_window(unsigned digits) {
  return sqrt(log(Real(10)) * std::max(20u, digits + 2));
}

}  // namespace

Real stieltjes_closed_form(int n) {
  const Real c = Real(n + 1) / 2;
  return exp(c * c);
}

QuadratureResult stieltjes_moment(int n, double lambda, const QuadratureSpec& spec) {
  if (n < 0) throw RangeError("moment order must be nonnegative");
  if (!(lambda >= -1.0 && lambda <= 1.0))
    throw DomainError("Stieltjes family parameter must lie in [-1, 1]");
  PrecisionScope scope(spec.digits);
  const Real pi = acos(Real(-1));
  const Real norm = 1 / sqrt(pi);
  auto g = [&](const Real& u) -> Real {
    return norm * exp((n + 1) * u - u * u) * (1 + lambda * sin(2 * pi * u));
  };
  const Real l = log_window(spec.digits);
  return integrate(g, -l, n + 1 + l, spec);
}

QuadratureResult stieltjes_perturbation(int n, const QuadratureSpec& spec) {
  if (n < 0) throw RangeError("moment order must be nonnegative");
  PrecisionScope scope(spec.digits);
  const Real pi = acos(Real(-1));
  const Real norm = 1 / sqrt(pi);
  auto g = [&](const Real& u) -> Real { return norm * exp((n + 1) * u - u * u) * sin(2 * pi * u); };
  const Real l = log_window(spec.digits);
  // The exact value is 0, so the tolerance is pinned to the moment's size.
  QuadratureSpec local = spec;
  local.abs_tol = std::max(spec.abs_tol,
                           spec.rel_tol * static_cast<double>(stieltjes_closed_form(n)));
  return integrate(g, -l, n + 1 + l, local);
}

RealMomentTable2D tensor_sequence(const HamburgerTable& s, const HamburgerTable& t,
                                  std::optional<int> degree) {
  const int d = degree.value_or(std::min(s.length(), t.length()));
  if (d < 0) throw RangeError("tensor degree must be nonnegative");
  if (s.length() < d || t.length() < d)
    throw RangeError("tensor degree " + std::to_string(d) + " exceeds sequence length");
  RealMomentTable2D a(d);
  for (int k = 0; k <= d; ++k)
    for (int l = 0; l <= d; ++l) a.set(k, l, static_cast<double>(s.s[k] * t.s[l]));
  return a;
}

namespace {

DiscreteMeasure absolute(const DiscreteMeasure& rho) {
  std::vector<Atom> atoms;
  for (const auto& a : rho.atoms())
    atoms.push_back({Complex(std::abs(a.location.real()), std::abs(a.location.imag())),
                     a.weight});
  return DiscreteMeasure(Domain::real_plane, std::move(atoms));
}

}  // namespace

Dc1Report dc1_property_suite(const DiscreteMeasure& mu, const DiscreteMeasure& nu1,
                             const DiscreteMeasure& nu2, int degree, int zariski_degree) {
  if (degree < 0) throw RangeError("degree must be nonnegative");
  Dc1Report rep;
  rep.degree = degree;
  rep.zariski_degree = zariski_degree;
  const DiscreteMeasure p1 = product_measure(mu, nu1), p2 = product_measure(mu, nu2);

  {
    auto& c = rep.shared_moments;
    c.name = "shared-moments";
    const auto a1 = plane_moments(p1, degree), a2 = plane_moments(p2, degree);
    const auto scale = plane_moments(absolute(p1), degree);
    double worst = 0.0;
    for (int t = 0; t <= degree; ++t)
      for (int k = 0; k <= t; ++k)
        worst = std::max(worst, std::abs(a1(k, t - k) - a2(k, t - k)) /
                                    std::max(1e-300, scale(k, t - k)));
    const bool differ = !approx_equal(p1, p2, 1e-9);
    c.value = worst;
    c.passed = worst <= 1e-9 && differ;
    c.detail = "max relative 2-D moment difference through total degree " +
               std::to_string(degree) + (differ ? "; products differ" : "; products coincide");
  }
  {
    auto& c = rep.no_mass_on_axis;
    c.name = "no-mass-on-axis";
    double mass = 0.0;
    for (const auto* p : {&p1, &p2})
      for (const auto& a : p->atoms())
        if (std::abs(a.location.real()) <= kMergeTolerance * (1.0 + p->max_modulus()))
          mass += a.weight;
    c.value = mass;
    c.passed = mass == 0.0;
    c.detail = "mass of both products on {0} x R";
  }
  {
    auto& c = rep.zariski_dense;
    c.name = "zariski-dense";
    std::vector<Complex> pts;
    for (const auto& a : (p1 + p2).atoms()) pts.push_back(a.location);
    if (static_cast<int>(mu.size()) < degree + 1) {
      c.passed = false;
      c.detail = "mu needs at least degree + 1 distinct atoms";
    } else {
      const ZariskiVerdict v = zariski_density_test(pts, zariski_degree);
      c.value = v.sigma_min / v.sigma_max;
      c.passed = v.dense;
      c.detail = std::to_string(pts.size()) + " support points, degree " +
                 std::to_string(zariski_degree) +
                 (v.dense ? ": no annihilating polynomial" : ": annihilating polynomial found");
    }
  }
  return rep;
}

Dc1Configuration dc1_example() {
  Dc1Configuration cfg;
  std::vector<Atom> mu;
  for (int k = 1; k <= 6; ++k) mu.push_back({Complex(k, 0.0), 1.0 / 6.0});
  cfg.mu = DiscreteMeasure(Domain::real_line, std::move(mu));
  cfg.nu1 = DiscreteMeasure(Domain::real_line, {{Complex(-1.5, 0.0), 0.2},
                                                {Complex(-0.4, 0.0), 0.3},
                                                {Complex(0.6, 0.0), 0.3},
                                                {Complex(2.0, 0.0), 0.2}});
  PrecisionScope scope(kDefaultDigits);
  cfg.nu2 = recover_atomic(real_moments(cfg.nu1, 3), 2);
  return cfg;
}

}  // namespace cmoment

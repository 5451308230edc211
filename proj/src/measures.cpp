#include "cmoment/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cmoment/error.hpp"

namespace cmoment {

const char* to_string(Domain d) noexcept {
  switch (d) {
    case Domain::complex_plane: return "complex-plane";
    case Domain::punctured_plane: return "punctured-plane";
    case Domain::unit_circle: return "unit-circle";
    case Domain::real_line: return "real-line";
    case Domain::real_plane: return "real-plane";
  }
  return "complex-plane";
}

Domain domain_from_string(const std::string& name) {
  for (Domain d : {Domain::complex_plane, Domain::punctured_plane,
                   Domain::unit_circle, Domain::real_line, Domain::real_plane})
    if (name == to_string(d)) return d;
  throw ParseError("unknown measure domain '" + name + "'");
}

namespace {

double merge_tolerance(const std::vector<Atom>& atoms) {
  double r = 0.0;
  for (const auto& a : atoms) r = std::max(r, std::abs(a.location));
  return kMergeTolerance * (1.0 + r);
}

void validate_atom(Atom& a, Domain domain) {
  if (!std::isfinite(a.location.real()) || !std::isfinite(a.location.imag()))
    throw DomainError("atom location must be finite");
  if (!std::isfinite(a.weight) || a.weight < 0.0)
    throw DomainError("atom weight must be finite and nonnegative");
  switch (domain) {
    case Domain::complex_plane:
    case Domain::real_plane:
      break;
    case Domain::punctured_plane:
      if (std::abs(a.location) <= kMergeTolerance)
        throw DomainError("punctured-plane measure has an atom at 0");
      break;
    case Domain::unit_circle:
      if (std::abs(std::abs(a.location) - 1.0) > kCircleTolerance)
        throw DomainError("unit-circle measure has an atom off the circle");
      break;
    case Domain::real_line:
      if (std::abs(a.location.imag()) >
          kMergeTolerance * (1.0 + std::abs(a.location)))
        throw DomainError("real-line measure has a non-real atom");
      a.location = Complex(a.location.real(), 0.0);
      break;
  }
}

// z^k for k = 0..degree.
std::vector<Complex> powers(Complex z, int degree) {
  std::vector<Complex> p(static_cast<std::size_t>(degree) + 1);
  p[0] = 1.0;
  for (int k = 1; k <= degree; ++k) p[k] = p[k - 1] * z;
  return p;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(Domain domain, std::vector<Atom> atoms)
    : domain_(domain) {
  for (auto& a : atoms) validate_atom(a, domain);
  const double tol = merge_tolerance(atoms);
  for (const auto& a : atoms) {
    if (a.weight == 0.0) continue;
    auto hit = std::find_if(atoms_.begin(), atoms_.end(), [&](const Atom& b) {
      return std::abs(b.location - a.location) <= tol;
    });
    if (hit != atoms_.end())
      hit->weight += a.weight;
    else
      atoms_.push_back(a);
  }
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) {
    if (x.location.real() != y.location.real())
      return x.location.real() < y.location.real();
    return x.location.imag() < y.location.imag();
  });
}

DiscreteMeasure DiscreteMeasure::dirac(Complex z, Domain domain, double weight) {
  return DiscreteMeasure(domain, {Atom{z, weight}});
}

double DiscreteMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.weight;
  return m;
}

double DiscreteMeasure::max_modulus() const {
  double r = 0.0;
  for (const auto& a : atoms_) r = std::max(r, std::abs(a.location));
  return r;
}

double DiscreteMeasure::mass_at(Complex z) const {
  const double tol = kMergeTolerance * (1.0 + std::max(max_modulus(), std::abs(z)));
  double m = 0.0;
  for (const auto& a : atoms_)
    if (std::abs(a.location - z) <= tol) m += a.weight;
  return m;
}

DiscreteMeasure DiscreteMeasure::retagged(Domain domain) const {
  return DiscreteMeasure(domain, atoms_);
}

DiscreteMeasure DiscreteMeasure::scaled(double factor) const {
  if (!(factor >= 0.0)) throw DomainError("measures scale by nonnegative factors");
  std::vector<Atom> out = atoms_;
  for (auto& a : out) a.weight *= factor;
  return DiscreteMeasure(domain_, std::move(out));
}

DiscreteMeasure DiscreteMeasure::without(Complex z) const {
  const double tol = kMergeTolerance * (1.0 + std::max(max_modulus(), std::abs(z)));
  std::vector<Atom> out;
  for (const auto& a : atoms_)
    if (std::abs(a.location - z) > tol) out.push_back(a);
  return DiscreteMeasure(domain_, std::move(out));
}

DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  Domain d = a.domain();
  if (a.domain() != b.domain()) {
    if (a.empty())
      d = b.domain();
    else if (!b.empty()) {
      if (a.domain() == Domain::real_plane || b.domain() == Domain::real_plane)
        throw DomainError("cannot add planar and complex measures");
      d = Domain::complex_plane;
    }
  }
  std::vector<Atom> atoms = a.atoms();
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return DiscreteMeasure(d, std::move(atoms));
}

bool approx_equal(const DiscreteMeasure& a, const DiscreteMeasure& b,
                  double rel_tol) {
  return max_atom_discrepancy(a, b) <= rel_tol;
}

double max_atom_discrepancy(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const double scale = std::max({1.0, a.max_modulus(), b.max_modulus()});
  const double mass = std::max({1e-300, a.total_mass(), b.total_mass()});
  std::vector<char> used(b.size(), 0);
  double worst = 0.0;
  for (const auto& x : a.atoms()) {
    std::size_t best = b.size();
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(b.atoms()[j].location - x.location);
      if (d < dist) {
        dist = d;
        best = j;
      }
    }
    used[best] = 1;
    worst = std::max(worst, dist / scale);
    worst = std::max(worst, std::abs(b.atoms()[best].weight - x.weight) / mass);
  }
  return worst;
}

DensityMeasure1D DensityMeasure1D::uniform(double lower, double upper,
                                           QuadratureSpec spec) {
  if (!(upper > lower)) throw DomainError("uniform density needs lower < upper");
  DensityMeasure1D d;
  d.name = "uniform";
  d.lower = lower;
  d.upper = upper;
  d.quadrature = spec;
  const double height = 1.0 / (upper - lower);
  d.density = [height](const Real&) -> Real { return Real(height); };
  return d;
}

DensityMeasure1D DensityMeasure1D::stieltjes(double lambda, QuadratureSpec spec) {
  if (!(lambda >= -1.0 && lambda <= 1.0))
    throw DomainError("Stieltjes family parameter must lie in [-1, 1]");
  DensityMeasure1D d;
  d.name = "stieltjes";
  d.support = Support::positive_half_line;
  d.lower = 0.0;
  d.upper = std::numeric_limits<double>::infinity();
  d.quadrature = spec;
  d.density = [lambda](const Real& x) -> Real {
    const Real pi = acos(Real(-1));
    const Real u = log(x);
    return exp(-u * u) / sqrt(pi) * (1 + lambda * sin(2 * pi * u));
  };
  return d;
}

MomentTable discrete_moments(const DiscreteMeasure& mu, int degree) {
  if (degree < 0) throw RangeError("degree must be nonnegative");
  if (mu.domain() == Domain::real_plane)
    throw DomainError("complex moments need a measure on the complex plane");
  MomentTable t(degree);
  for (const auto& a : mu.atoms()) {
    const auto zp = powers(a.location, degree);
    const auto zc = powers(std::conj(a.location), degree);
    for (int m = 0; m <= degree; ++m)
      for (int n = 0; n <= degree; ++n) t(m, n) += a.weight * zp[m] * zc[n];
  }
  return t;
}

QuadratureResult density_moment(const DensityMeasure1D& tau, int n) {
  if (n < 0) throw RangeError("moment order must be nonnegative");
  if (!tau.density) throw DomainError("density measure has no density");
  PrecisionScope scope(tau.quadrature.digits);
  if (tau.support == DensityMeasure1D::Support::interval) {
    if (!std::isfinite(tau.lower) || !std::isfinite(tau.upper))
      throw DomainError("interval densities need finite endpoints");
    auto f = [&](const Real& x) -> Real { return pow(x, n) * tau.density(x); };
    return integrate(f, Real(tau.lower), Real(tau.upper), tau.quadrature);
  }
  // x = e^u: int_0^inf x^n f(x) dx = int e^{(n+1)u} f(e^u) du
  auto g = [&](const Real& u) -> Real { return exp((n + 1) * u) * tau.density(exp(u)); };
  return integrate_line(g, Real(0), Real(4), tau.quadrature);
}

DiscreteMeasure transport_phi(const DiscreteMeasure& nu) {
  if (nu.domain() != Domain::unit_circle)
    throw DomainError("transport_phi needs a unit-circle measure");
  std::vector<Atom> out;
  for (const auto& a : nu.atoms()) out.push_back({a.location * a.location, a.weight});
  return DiscreteMeasure(Domain::unit_circle, std::move(out));
}

DiscreteMeasure transport_psi(const DiscreteMeasure& mu) {
  if (mu.domain() == Domain::real_plane)
    throw DomainError("transport_psi needs a measure on the complex plane");
  std::vector<Atom> out;
  for (const auto& a : mu.atoms()) {
    if (std::abs(a.location) <= kMergeTolerance)
      throw DomainError("transport_psi is undefined at 0");
    const Complex w = a.location / std::conj(a.location);
    out.push_back({w / std::abs(w), a.weight});
  }
  return DiscreteMeasure(Domain::unit_circle, std::move(out));
}

HerglotzTable trig_moments(const DiscreteMeasure& nu, int degree) {
  if (nu.domain() != Domain::unit_circle)
    throw DomainError("trigonometric moments need a unit-circle measure");
  HerglotzTable s(degree);
  for (const auto& a : nu.atoms()) {
    const auto zp = powers(a.location, degree);
    for (int n = 0; n <= degree; ++n) s[n] += a.weight * zp[n];
  }
  for (int n = 1; n <= degree; ++n) s[-n] = std::conj(s[n]);
  s[0] = Complex(s[0].real(), 0.0);
  return s;
}

DiscreteMeasure product_measure(const DiscreteMeasure& mu,
                                const DiscreteMeasure& nu) {
  if (mu.domain() != Domain::real_line || nu.domain() != Domain::real_line)
    throw DomainError("product_measure needs two real-line measures");
  std::vector<Atom> out;
  for (const auto& a : mu.atoms())
    for (const auto& b : nu.atoms())
      out.push_back({Complex(a.location.real(), b.location.real()),
                     a.weight * b.weight});
  return DiscreteMeasure(Domain::real_plane, std::move(out));
}

DiscreteMeasure shift_to_horizontal_line(const DiscreteMeasure& tau, double h) {
  if (tau.domain() != Domain::real_line)
    throw DomainError("shift_to_horizontal_line needs a real-line measure");
  std::vector<Atom> out;
  for (const auto& a : tau.atoms())
    out.push_back({Complex(a.location.real(), h), a.weight});
  return DiscreteMeasure(Domain::complex_plane, std::move(out));
}

HamburgerTable real_moments(const DiscreteMeasure& tau, int length) {
  if (tau.domain() != Domain::real_line)
    throw DomainError("Hamburger moments need a real-line measure");
  if (length < 0) throw RangeError("length must be nonnegative");
  HamburgerTable t;
  for (int k = 0; k <= length; ++k) t.s.emplace_back(Real(0, working_digits()));
  for (const auto& a : tau.atoms()) {
    const Real x(a.location.real(), working_digits());
    Real p(a.weight, working_digits());
    for (int k = 0; k <= length; ++k) {
      t.s[k] += p;
      p *= x;
    }
  }
  return t;
}

RealMomentTable2D plane_moments(const DiscreteMeasure& rho, int degree) {
  if (rho.domain() != Domain::real_plane && rho.domain() != Domain::complex_plane)
    throw DomainError("planar moments need a real-plane measure");
  RealMomentTable2D a(degree);
  std::vector<double> sum(static_cast<std::size_t>(degree + 1) * (degree + 1), 0.0);
  for (const auto& at : rho.atoms()) {
    double xk = at.weight;
    for (int k = 0; k <= degree; ++k) {
      double v = xk;
      for (int l = 0; l <= degree; ++l) {
        sum[static_cast<std::size_t>(k) * (degree + 1) + l] += v;
        v *= at.location.imag();
      }
      xk *= at.location.real();
    }
  }
  for (int k = 0; k <= degree; ++k)
    for (int l = 0; l <= degree; ++l)
      a.set(k, l, sum[static_cast<std::size_t>(k) * (degree + 1) + l]);
  return a;
}

}  // namespace cmoment

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cmoment/quadrature.hpp"
#include "cmoment/tables.hpp"

namespace cmoment {

enum class Domain {
  complex_plane,
  punctured_plane,  // no atom at 0
  unit_circle,
  real_line,
  real_plane,  // (x, y) stored as x + iy
};

const char* to_string(Domain d) noexcept;
Domain domain_from_string(const std::string& name);

inline constexpr double kMergeTolerance = 1e-12;
inline constexpr double kCircleTolerance = 1e-10;

struct Atom {
  Complex location;
  double weight = 0.0;
};

// Finite nonnegative combination of point masses. Construction validates the
// domain tag, merges atoms closer than kMergeTolerance * (1 + max modulus)
// and orders atoms by (re, im) so equal measures compare equal.
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(Domain domain = Domain::complex_plane,
                           std::vector<Atom> atoms = {});

  static DiscreteMeasure dirac(Complex z, Domain domain = Domain::complex_plane,
                               double weight = 1.0);

  Domain domain() const noexcept { return domain_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }

  double total_mass() const;
  double max_modulus() const;
  // Mass carried at z (within the merge tolerance).
  double mass_at(Complex z) const;

  // Same atoms under another tag; validated like a fresh construction.
  DiscreteMeasure retagged(Domain domain) const;
  DiscreteMeasure scaled(double factor) const;
  // Removes the atom at z, if any.
  DiscreteMeasure without(Complex z) const;

  friend DiscreteMeasure operator+(const DiscreteMeasure& a,
                                   const DiscreteMeasure& b);

 private:
  Domain domain_;
  std::vector<Atom> atoms_;
};

// Atom-by-atom comparison after canonical ordering.
bool approx_equal(const DiscreteMeasure& a, const DiscreteMeasure& b,
                  double rel_tol = 1e-10);
// Largest relative location/weight discrepancy between two measures with the
// same number of atoms; infinity when the counts differ.
double max_atom_discrepancy(const DiscreteMeasure& a, const DiscreteMeasure& b);

// Density on an interval of the real line; `positive_half_line` means
// (0, infinity) and is integrated in log coordinates.
struct DensityMeasure1D {
  enum class Support { interval, positive_half_line };

  std::string name;
  std::function<Real(const Real&)> density;
  Support support = Support::interval;
  double lower = 0.0;
  double upper = 1.0;
  QuadratureSpec quadrature;

  static DensityMeasure1D uniform(double lower, double upper,
                                  QuadratureSpec spec = {});
  // pi^{-1/2} exp(-(ln x)^2) (1 + lambda sin(2 pi ln x)) on (0, infinity).
  static DensityMeasure1D stieltjes(double lambda, QuadratureSpec spec = {});
};

// gamma_{m,n} = sum w z^m conj(z)^n, 0 <= m,n <= degree.
MomentTable discrete_moments(const DiscreteMeasure& mu, int degree);

// s_n = int x^n dtau. Throws ConvergenceError with the best estimate.
QuadratureResult density_moment(const DensityMeasure1D& tau, int n);

// Push-forward under z -> z^2 on the unit circle.
DiscreteMeasure transport_phi(const DiscreteMeasure& nu);
// Push-forward under z -> z / conj(z) from the punctured plane to the circle.
DiscreteMeasure transport_psi(const DiscreteMeasure& mu);

HerglotzTable trig_moments(const DiscreteMeasure& nu, int degree);

DiscreteMeasure product_measure(const DiscreteMeasure& mu,
                                const DiscreteMeasure& nu);

// x -> x + i h for every atom of a real-line measure.
DiscreteMeasure shift_to_horizontal_line(const DiscreteMeasure& tau, double h);

// s_0..s_length of a real-line measure, summed at working precision.
HamburgerTable real_moments(const DiscreteMeasure& tau, int length);

// a_{k,l} = sum w x^k y^l for all 0 <= k,l <= degree.
RealMomentTable2D plane_moments(const DiscreteMeasure& rho, int degree);

}  // namespace cmoment

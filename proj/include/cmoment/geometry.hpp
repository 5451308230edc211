#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmoment/measures.hpp"

namespace cmoment {

// Real polynomial in (x, y): {(deg_x, deg_y) -> coefficient}.
class Polynomial2 {
 public:
  Polynomial2() = default;
  explicit Polynomial2(std::map<std::pair<int, int>, double> coeffs);

  const std::map<std::pair<int, int>, double>& coefficients() const noexcept {
    return coeffs_;
  }
  double operator()(double x, double y) const;
  double coefficient_norm() const;  // sum of |c|
  bool is_zero() const noexcept { return coeffs_.empty(); }

 private:
  std::map<std::pair<int, int>, double> coeffs_;
};

// Polynomial in (z, zbar): {(m, n) -> coefficient of z^m zbar^n}.
struct ZPolynomial {
  std::map<std::pair<int, int>, Complex> coeffs;

  Complex operator()(Complex z) const;
  // p = re + i im with re, im real polynomials in (x, y).
  std::pair<Polynomial2, Polynomial2> real_form() const;
};

struct Parameterization {
  std::function<Complex(double)> point;
  double t_lo = 0.0;
  double t_hi = 1.0;
  // Samples sit at t_lo + (t_hi - t_lo) (j + offset) / N, j = 0..N-1.
  double sample_offset = 0.0;
};

struct Curve {
  std::string name;
  Polynomial2 implicit;
  std::optional<Parameterization> parameterization;
  std::map<std::string, double> params;

  // Largest |p| / (1 + |coefficients|) over n parameter samples.
  double parameter_residual(int samples = 64) const;
  std::vector<Complex> sample(int n) const;
};

// Catalog of curves on which z -> z / zbar is injective, plus the circle and
// parabola where it is not. Factories validate their parameters.
namespace curves {
Curve line(double a, double b, double c);                     // a x + b y = c
Curve neil(int k, int l, double a, double y0);                // (y - y0)^l = a x^{2k}
Curve agnesi(double a, double b);                             // y (x^2 + a) = b
Curve cissoid(double a, double x0);                           // ((x-x0)^2 + y^2)(x-x0) = 2 a y^2
Curve power_curve(int k, int l, double a);                    // y^l x^{2k} = a
Curve unit_circle();
Curve parabola();                                             // y = x^2 + 1
Curve from_name(const std::string& name, const std::map<std::string, double>& params);
}  // namespace curves

std::vector<Curve> curve_catalog();

double localization_residual(const DiscreteMeasure& mu, const Polynomial2& p);
double localization_residual(const DiscreteMeasure& mu, const Curve& curve);
double localization_residual(const DiscreteMeasure& mu, const ZPolynomial& p);

struct SupportClass {
  enum class Kind { zero_and_roots, circle, real_line };
  Kind kind = Kind::real_line;
  int r = 1;  // zero_and_roots only: supp in {0} u G_r
  bool zero_excluded = false;

  friend bool operator==(const SupportClass&, const SupportClass&) = default;
};

const char* to_string(SupportClass::Kind kind) noexcept;

// Support type forced by (k, l)-flatness.
SupportClass classify_flat_support(int k, int l);
// The flatness pair carried by measures of a support class.
std::pair<int, int> flatness_for_support(const SupportClass& cls);
// Whether every support allowed by `inner` is also allowed by `outer`.
bool support_contains(const SupportClass& outer, const SupportClass& inner);

// Im(z1 conj z2) = 0 within 1e-10 |z1||z2|; same as psi(z1) = psi(z2).
bool collinear_through_origin(Complex z1, Complex z2);

struct InjectivityVerdict {
  bool violated = false;
  int samples = 0;
  std::optional<std::pair<Complex, Complex>> witness;
};

// Falsification only: scans all sample pairs in order for two distinct points
// on one line through the origin.
InjectivityVerdict psi_injectivity_sample_test(const Curve& curve, int samples);

// Points (+-x, y) on y (x^2 + a) = b; one point at the apex.
std::vector<Complex> agnesi_fiber(double a, double b, double y);

// Push-forward of a planar measure under (x, y) -> x (axis 1) or y (axis 2).
DiscreteMeasure marginal_transport(const DiscreteMeasure& rho, int axis);

struct ZariskiVerdict {
  bool dense = false;
  int degree = 0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  // Normalized kernel polynomial when not dense.
  std::optional<Polynomial2> annihilator;
};

// Rank test of the evaluation matrix of x^k y^l, k + l <= d, at the points.
ZariskiVerdict zariski_density_test(const std::vector<Complex>& points, int d);

}  // namespace cmoment

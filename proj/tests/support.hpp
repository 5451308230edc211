#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cmoment/measures.hpp"

namespace testing_support {

using cmoment::Atom;
using cmoment::Complex;
using cmoment::DiscreteMeasure;
using cmoment::Domain;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611ULL);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline Complex random_point(double radius) {
  const double r = radius * std::sqrt(uniform(0.0, 1.0));
  return std::polar(r, uniform(0.0, 2.0 * M_PI));
}

inline DiscreteMeasure random_plane_measure(int max_atoms, double radius,
                                            Domain domain = Domain::complex_plane) {
  std::vector<Atom> atoms;
  const int n = uniform_int(1, max_atoms);
  for (int k = 0; k < n; ++k) {
    Complex z = random_point(radius);
    if (domain == Domain::punctured_plane && std::abs(z) < 1e-3) z += 0.5;
    atoms.push_back({z, uniform(0.05, 1.0)});
  }
  return DiscreteMeasure(domain, atoms);
}

inline DiscreteMeasure random_circle_measure(int max_atoms) {
  std::vector<Atom> atoms;
  const int n = uniform_int(1, max_atoms);
  for (int k = 0; k < n; ++k)
    atoms.push_back({std::polar(1.0, uniform(0.0, 2.0 * M_PI)), uniform(0.05, 1.0)});
  return DiscreteMeasure(Domain::unit_circle, atoms);
}

inline DiscreteMeasure random_real_measure(int max_atoms, double radius) {
  std::vector<Atom> atoms;
  const int n = uniform_int(1, max_atoms);
  for (int k = 0; k < n; ++k) atoms.push_back({Complex(uniform(-radius, radius), 0.0), uniform(0.05, 1.0)});
  return DiscreteMeasure(Domain::real_line, atoms);
}

// Direct oracle: sum over atoms of w z^m conj(z)^n with std::pow.
inline Complex moment_oracle(const DiscreteMeasure& mu, int m, int n) {
  Complex total = 0.0;
  for (const auto& a : mu.atoms())
    total += a.weight * std::pow(a.location, m) * std::pow(std::conj(a.location), n);
  return total;
}

inline Complex c(double re, double im = 0.0) { return Complex(re, im); }

}  // namespace testing_support

#pragma once

#include <functional>

#include "cmoment/precision.hpp"

namespace cmoment {

struct QuadratureSpec {
  unsigned digits = kDefaultDigits;
  int max_subdivisions = 4000;
  double abs_tol = 0.0;
  double rel_tol = 1e-28;
  // Gauss-Legendre points per panel.
  int order = 20;
};

struct QuadratureResult {
  Real value;
  Real error_estimate;
  int subdivisions = 0;
};

using RealFunction = std::function<Real(const Real&)>;

// Globally adaptive Gauss-Legendre on [a, b]: the panel with the largest
// local error (one rule against the sum over its halves) is bisected until
// the summed error meets the tolerance. Evaluates at the caller's working
// precision; throws ConvergenceError past max_subdivisions.
QuadratureResult integrate(const RealFunction& f, const Real& a, const Real& b,
                           const QuadratureSpec& spec);

// Integral over the whole real line of a function that decays in both
// directions. Starts from [center - width, center + width] and appends panels
// of the same width until two consecutive panels on each side are negligible.
QuadratureResult integrate_line(const RealFunction& f, const Real& center,
                                const Real& width, const QuadratureSpec& spec);

}  // namespace cmoment

#include "cmoment/quadrature.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "cmoment/error.hpp"

namespace cmoment {

namespace {

struct Rule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n at the working
// precision. Cached per (order, digits) on this thread.
const Rule& legendre_rule(int order) {
  thread_local std::map<std::pair<int, unsigned>, Rule> cache;
  const unsigned digits = working_digits();
  auto key = std::make_pair(order, digits);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  Rule rule;
  const Real pi = acos(Real(-1));
  const Real eps = pow(Real(10), 2 - static_cast<int>(digits));
  for (int i = 1; i <= order; ++i) {
    Real x = cos(pi * (i - Real(0.25)) / (order + Real(0.5)));
    Real dp;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= order; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= eps) break;
    }
    // refresh derivative at the converged node
    Real p0 = 1, p1 = x;
    for (int k = 2; k <= order; ++k) {
      Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1);
    rule.nodes.push_back(x);
    rule.weights.push_back(2 / ((1 - x * x) * dp * dp));
  }
  return cache.emplace(key, std::move(rule)).first->second;
}

Real apply_rule(const Rule& rule, const RealFunction& f, const Real& a,
                const Real& b) {
  const Real mid = (a + b) / 2, half = (b - a) / 2;
  Real sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

struct Panel {
  Real a, b, value, error;
};

Panel make_panel(const Rule& rule, const RealFunction& f, const Real& a,
                 const Real& b) {
  const Real mid = (a + b) / 2;
  const Real whole = apply_rule(rule, f, a, b);
  const Real split = apply_rule(rule, f, a, mid) + apply_rule(rule, f, mid, b);
  return Panel{a, b, split, abs(whole - split)};
}

}  // namespace

QuadratureResult integrate(const RealFunction& f, const Real& a_in,
                           const Real& b_in, const QuadratureSpec& spec) {
  if (spec.order < 2) throw DomainError("quadrature order must be at least 2");
  if (spec.max_subdivisions < 1)
    throw DomainError("subdivision limit must be positive");
  PrecisionScope scope(spec.digits);
  const Real a = at_working_precision(a_in), b = at_working_precision(b_in);
  if (a == b) return {Real(0), Real(0), 0};
  const Rule& rule = legendre_rule(spec.order);

  std::vector<Panel> panels{make_panel(rule, f, a, b)};
  int subdivisions = 0;
  for (;;) {
    Real total = 0, error = 0;
    for (const auto& p : panels) {
      total += p.value;
      error += p.error;
    }
    const Real target = std::max(Real(spec.abs_tol), Real(spec.rel_tol * abs(total)));
    if (error <= target) return {total, error, subdivisions};
    if (subdivisions >= spec.max_subdivisions)
      throw ConvergenceError("adaptive quadrature did not converge",
                             static_cast<double>(total),
                             static_cast<double>(error));
    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& x, const Panel& y) { return x.error < y.error; });
    const Panel p = *worst;
    const Real mid = (p.a + p.b) / 2;
    *worst = make_panel(rule, f, p.a, mid);
    panels.push_back(make_panel(rule, f, mid, p.b));
    ++subdivisions;
  }
}

QuadratureResult integrate_line(const RealFunction& f, const Real& center,
                                const Real& width, const QuadratureSpec& spec) {
  PrecisionScope scope(spec.digits);
  if (width <= 0) throw DomainError("panel width must be positive");
  QuadratureResult total = integrate(f, center - width, center + width, spec);
  // Each tail gets its own stopping rule.
  for (int side : {-1, 1}) {
    int quiet = 0;
    for (int k = 1; k <= 400 && quiet < 2; ++k) {
      const Real lo = center + side * width * (2 * k - 1);
      const Real hi = lo + side * width * 2;
      QuadratureResult part = side > 0 ? integrate(f, lo, hi, spec)
                                       : integrate(f, hi, lo, spec);
      total.value += part.value;
      total.error_estimate += part.error_estimate;
      total.subdivisions += part.subdivisions;
      const Real target =
          std::max(Real(spec.abs_tol), Real(spec.rel_tol * abs(total.value)));
      quiet = abs(part.value) <= target ? quiet + 1 : 0;
    }
    if (quiet < 2)
      throw ConvergenceError("integrand does not decay along the real line",
                             static_cast<double>(total.value),
                             static_cast<double>(total.error_estimate));
  }
  return total;
}

}  // namespace cmoment

#include "cmoment/extensions.hpp"

#include <cmath>

#include "cmoment/error.hpp"

namespace cmoment {

namespace {

// z^m zbar^n for integer exponents of either sign, z != 0.
Complex monomial(Complex z, int m, int n) {
  const Complex zc = std::conj(z);
  Complex r = 1.0;
  const Complex zm = m >= 0 ? z : 1.0 / z;
  const Complex zn = n >= 0 ? zc : 1.0 / zc;
  for (int i = 0; i < std::abs(m); ++i) r *= zm;
  for (int i = 0; i < std::abs(n); ++i) r *= zn;
  return r;
}

}  // namespace

RepresentingPair::RepresentingPair(DiscreteMeasure mu, DiscreteMeasure nu)
    : mu_(mu.domain() == Domain::punctured_plane
              ? std::move(mu)
              : mu.retagged(Domain::punctured_plane)),
      nu_(nu.domain() == Domain::unit_circle ? std::move(nu)
                                             : nu.retagged(Domain::unit_circle)) {
  if (mu_.domain() == Domain::real_plane || nu_.domain() == Domain::real_plane)
    throw DomainError("representing pairs live in the complex plane");
}

ExtendedMomentTable build_extension(const RepresentingPair& pair, int window) {
  if (window < 1) throw RangeError("window must be at least 1");
  ExtendedMomentTable big(window);
  for (const Index2 ix : big.indices()) {
    Complex v = 0.0;
    for (const auto& a : pair.mu().atoms())
      v += a.weight * monomial(a.location, ix.m, ix.n);
    if (ix.m + ix.n == 0)
      for (const auto& a : pair.nu().atoms())
        v += a.weight * monomial(a.location, ix.m, ix.n);
    big(ix.m, ix.n) = v;
  }
  return big;
}

DiscreteMeasure pair_to_measure(const RepresentingPair& pair) {
  const DiscreteMeasure mu = pair.mu().retagged(Domain::complex_plane);
  const double mass = pair.nu().total_mass();
  if (mass == 0.0) return mu;
  return mu + DiscreteMeasure::dirac(0.0, Domain::complex_plane, mass);
}

RepresentingPair measure_to_pair(const DiscreteMeasure& mu,
                                 const DiscreteMeasure& circle_profile) {
  if (circle_profile.domain() != Domain::unit_circle)
    throw DomainError("circle profile must be a unit-circle measure");
  if (std::abs(circle_profile.total_mass() - 1.0) > 1e-12)
    throw DomainError("circle profile must have unit mass");
  const double t = mu.mass_at(0.0);
  DiscreteMeasure rest = mu.without(0.0).retagged(Domain::punctured_plane);
  if (t == 0.0) return RepresentingPair(std::move(rest), DiscreteMeasure(Domain::unit_circle));
  return RepresentingPair(std::move(rest), circle_profile.scaled(t));
}

ExtendedMomentTable snu2_family(const DiscreteMeasure& mu, double t, int window) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("convex parameter must lie in [0, 1]");
  const double alpha = mu.mass_at(0.0);
  if (!(alpha > 0.0))
    throw PreconditionError("the measure has no atom at 0, so its extension is unique");
  const DiscreteMeasure rest = mu.without(0.0).retagged(Domain::punctured_plane);
  const auto first = build_extension(
      RepresentingPair(rest, DiscreteMeasure::dirac(1.0, Domain::unit_circle, alpha)),
      window);
  const auto second = build_extension(
      RepresentingPair(rest, DiscreteMeasure::dirac(Complex(0.0, 1.0),
                                                    Domain::unit_circle, alpha)),
      window);
  ExtendedMomentTable out(window);
  for (const Index2 ix : out.indices())
    out(ix.m, ix.n) = t * first(ix.m, ix.n) + (1.0 - t) * second(ix.m, ix.n);
  return out;
}

QuasiDeterminacyResidual quasi_det_residual(const RepresentingPair& first,
                                            const RepresentingPair& second,
                                            int degree) {
  if (degree < 0) throw RangeError("degree must be nonnegative");
  auto circle_image = [](const RepresentingPair& p) {
    return transport_psi(p.mu()) + transport_phi(p.nu());
  };
  const auto s1 = trig_moments(circle_image(first).retagged(Domain::unit_circle), degree);
  const auto s2 = trig_moments(circle_image(second).retagged(Domain::unit_circle), degree);
  QuasiDeterminacyResidual r;
  for (int n = -degree; n <= degree; ++n)
    r.per_order.push_back(std::abs(s1[n] - s2[n]));
  // Ties go to the smallest |n|, positive first.
  for (int n = 0; n <= degree; ++n)
    for (int sn : {n, -n}) {
      const double d = r.per_order[static_cast<std::size_t>(sn + degree)];
      if (d > r.max) {
        r.max = d;
        r.at = sn;
      }
    }
  return r;
}

}  // namespace cmoment

#pragma once

#include <vector>

#include "cmoment/measures.hpp"
#include "cmoment/tables.hpp"

namespace cmoment {

// (mu on the punctured plane, nu on the unit circle). The nu part only
// contributes on the anti-diagonal m + n = 0 of an extended table.
class RepresentingPair {
 public:
  RepresentingPair(DiscreteMeasure mu, DiscreteMeasure nu);

  const DiscreteMeasure& mu() const noexcept { return mu_; }
  const DiscreteMeasure& nu() const noexcept { return nu_; }

 private:
  DiscreteMeasure mu_;
  DiscreteMeasure nu_;
};

// Gamma_{m,n} = int z^m zbar^n dmu + [m + n == 0] int z^m zbar^n dnu.
ExtendedMomentTable build_extension(const RepresentingPair& pair, int window);

// mu + nu(T) delta_0.
DiscreteMeasure pair_to_measure(const RepresentingPair& pair);

// Splits off t = mu({0}) and hands it to the circle as t * profile.
RepresentingPair measure_to_pair(const DiscreteMeasure& mu,
                                 const DiscreteMeasure& circle_profile);

// t Gamma_1 + (1 - t) Gamma_2 for the pairs (mu - a delta_0, a delta_1) and
// (mu - a delta_0, a delta_i), a = mu({0}) > 0.
ExtendedMomentTable snu2_family(const DiscreteMeasure& mu, double t, int window);

struct QuasiDeterminacyResidual {
  double max = 0.0;
  int at = 0;
  // |difference| for n = -D..D.
  std::vector<double> per_order;
};

// Compares trigonometric moments of psi_*(mu_j) + phi_*(nu_j) for |n| <= D.
QuasiDeterminacyResidual quasi_det_residual(const RepresentingPair& first,
                                            const RepresentingPair& second,
                                            int degree);

}  // namespace cmoment

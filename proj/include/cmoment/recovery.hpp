#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmoment/geometry.hpp"
#include "cmoment/measures.hpp"
#include "cmoment/quadrature.hpp"

namespace cmoment {

// Symmetric tridiagonal matrix: diagonal alpha_0..alpha_{N-1}, positive
// off-diagonal beta_1..beta_{N-1} (stored from index 0).
struct JacobiMatrix {
  std::vector<Real> alpha;
  std::vector<Real> beta;

  int order() const noexcept { return static_cast<int>(alpha.size()); }
};

struct RecoveryOptions {
  unsigned digits = kDefaultDigits;
  // Relative Cholesky pivot below which the Hankel matrix counts as rank
  // deficient; 0 picks 10^{-2p/3} for input precision p digits.
  double rank_tolerance = 0.0;
};

// Recurrence coefficients of the orthonormal polynomials of s up to degree N
// from the Cholesky factor of the Hankel matrix (uses s_0..s_{2N-1}). Retries
// at doubled precision when a pivot fails; throws RankDeficientError with the
// numerical rank if it still fails.
JacobiMatrix hankel_to_jacobi(const HamburgerTable& s, int n,
                              const RecoveryOptions& opts = {});

struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// Golub-Welsch: nodes are eigenvalues of J, weights total_mass times squared
// first eigenvector components. Implicit QL at working precision.
GaussRule jacobi_to_rule(const JacobiMatrix& j, const Real& total_mass);
DiscreteMeasure jacobi_to_atoms(const JacobiMatrix& j, double total_mass);

// N-atom measure sharing s_0..s_{2N-1}.
DiscreteMeasure recover_atomic(const HamburgerTable& s, int n,
                               const RecoveryOptions& opts = {});

// int_0^inf x^n f_lambda(x) dx in log coordinates over [-L, n + 1 + L].
QuadratureResult stieltjes_moment(int n, double lambda, const QuadratureSpec& spec = {});
// int_0^inf x^n f_0(x) sin(2 pi ln x) dx, which vanishes for every n.
QuadratureResult stieltjes_perturbation(int n, const QuadratureSpec& spec = {});
// e^{(n+1)^2 / 4} at working precision.
Real stieltjes_closed_form(int n);

// a_{k,l} = s_k t_l for 0 <= k,l <= degree (default: shorter length).
RealMomentTable2D tensor_sequence(const HamburgerTable& s, const HamburgerTable& t,
                                  std::optional<int> degree = std::nullopt);

struct Dc1Check {
  std::string name;
  bool passed = false;
  std::string detail;
  double value = 0.0;
};

struct Dc1Report {
  Dc1Check shared_moments;  // 1: products share 2-D moments, measures differ
  Dc1Check no_mass_on_axis; // 2: no mass on {0} x R
  Dc1Check zariski_dense;   // 3: union of supports dense at bounded degree
  int degree = 0;
  int zariski_degree = 0;

  bool passed() const {
    return shared_moments.passed && no_mass_on_axis.passed && zariski_dense.passed;
  }
};

Dc1Report dc1_property_suite(const DiscreteMeasure& mu, const DiscreteMeasure& nu1,
                             const DiscreteMeasure& nu2, int degree,
                             int zariski_degree = 2);

struct Dc1Configuration {
  DiscreteMeasure mu;
  DiscreteMeasure nu1;
  DiscreteMeasure nu2;
  int degree = 3;
  int zariski_degree = 2;
};

// mu uniform on {1..6}, nu1 a fixed 4-atom measure, nu2 its 2-point Gauss
// compression (shares moments through order 3).
Dc1Configuration dc1_example();

}  // namespace cmoment

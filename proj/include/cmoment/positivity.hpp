#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "cmoment/tables.hpp"

namespace cmoment {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-9;

// Hermitian matrix whose rows and columns are labelled by lattice indices
// (Hankel and Toeplitz matrices use (i, 0)).
struct HermitianMatrix {
  Eigen::MatrixXcd entries;
  std::vector<Index2> labels;

  int dimension() const { return static_cast<int>(entries.rows()); }
};

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double spectral_norm = 0.0;
  double tolerance = 0.0;
  // Unit eigenvector of the minimum eigenvalue when not psd. Within a
  // degenerate eigenspace the projection of the first basis vector with a
  // nonzero component is chosen, phase-normalized so its largest entry is
  // real and positive.
  std::optional<Eigen::VectorXcd> witness;
};

// Index sets in graded order: total m + n ascending, then m descending.
std::vector<Index2> quadrant_indices(int d);
std::vector<Index2> halfplane_indices(int d);

// Entry ((m,n),(p,q)) = gamma_{m+q, n+p} over 0 <= m,n <= d. Needs 2d <= degree.
HermitianMatrix moment_matrix_quadrant(const MomentTable& gamma, int d);
// Same kernel over m + n >= 0, max(|m|,|n|) <= d. Needs window >= 2d.
HermitianMatrix moment_matrix_halfplane(const ExtendedMomentTable& big, int d);

HermitianMatrix hankel(const HamburgerTable& s, int d);
HermitianMatrix toeplitz(const HerglotzTable& s, int d);

// Throws InvariantError when A is not Hermitian to kHermitianTolerance.
PsdReport is_psd(const HermitianMatrix& a, double rel_tol = kPsdTolerance);

}  // namespace cmoment

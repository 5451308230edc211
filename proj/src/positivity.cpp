#include "cmoment/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "cmoment/error.hpp"

namespace cmoment {

namespace {

void graded_sort(std::vector<Index2>& idx) {
  std::stable_sort(idx.begin(), idx.end(), [](const Index2& a, const Index2& b) {
    if (a.m + a.n != b.m + b.n) return a.m + a.n < b.m + b.n;
    return a.m > b.m;
  });
}

}  // namespace

std::vector<Index2> quadrant_indices(int d) {
  std::vector<Index2> idx;
  for (int m = 0; m <= d; ++m)
    for (int n = 0; n <= d; ++n) idx.push_back({m, n});
  graded_sort(idx);
  return idx;
}

std::vector<Index2> halfplane_indices(int d) {
  std::vector<Index2> idx;
  for (int m = -d; m <= d; ++m)
    for (int n = -d; n <= d; ++n)
      if (m + n >= 0) idx.push_back({m, n});
  graded_sort(idx);
  return idx;
}

HermitianMatrix moment_matrix_quadrant(const MomentTable& gamma, int d) {
  if (d < 0) throw RangeError("matrix order must be nonnegative");
  if (2 * d > gamma.degree())
    throw RangeError("moment matrix of order " + std::to_string(d) +
                     " needs table degree " + std::to_string(2 * d));
  gamma.require_hermitian(kHermitianTolerance);
  HermitianMatrix a;
  a.labels = quadrant_indices(d);
  const auto n = static_cast<Eigen::Index>(a.labels.size());
  a.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Index2 r = a.labels[i], c = a.labels[j];
      a.entries(i, j) = gamma(r.m + c.n, r.n + c.m);
    }
  return a;
}

HermitianMatrix moment_matrix_halfplane(const ExtendedMomentTable& big, int d) {
  if (d < 0) throw RangeError("matrix order must be nonnegative");
  if (2 * d > big.window())
    throw RangeError("half-plane matrix of order " + std::to_string(d) +
                     " needs window " + std::to_string(2 * d));
  HermitianMatrix a;
  a.labels = halfplane_indices(d);
  const auto n = static_cast<Eigen::Index>(a.labels.size());
  a.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Index2 r = a.labels[i], c = a.labels[j];
      a.entries(i, j) = big(r.m + c.n, r.n + c.m);
    }
  return a;
}

HermitianMatrix hankel(const HamburgerTable& s, int d) {
  if (d < 0) throw RangeError("matrix order must be nonnegative");
  if (s.length() < 2 * d)
    throw RangeError("Hankel matrix of order " + std::to_string(d) +
                     " needs s_0..s_" + std::to_string(2 * d));
  HermitianMatrix a;
  a.entries.resize(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    a.labels.push_back({i, 0});
    for (int j = 0; j <= d; ++j)
      a.entries(i, j) = Complex(static_cast<double>(s.s[i + j]), 0.0);
  }
  return a;
}

HermitianMatrix toeplitz(const HerglotzTable& s, int d) {
  if (d < 0) throw RangeError("matrix order must be nonnegative");
  if (s.degree() < d)
    throw RangeError("Toeplitz matrix of order " + std::to_string(d) +
                     " needs trigonometric degree " + std::to_string(d));
  HermitianMatrix a;
  a.entries.resize(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    a.labels.push_back({i, 0});
    for (int j = 0; j <= d; ++j) a.entries(i, j) = s[i - j];
  }
  return a;
}

PsdReport is_psd(const HermitianMatrix& a, double rel_tol) {
  const auto n = a.entries.rows();
  if (n != a.entries.cols()) throw InvariantError("matrix is not square");
  PsdReport rep;
  if (n == 0) {
    rep.psd = true;
    return rep;
  }
  const double scale = std::max(1e-300, a.entries.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      if (std::abs(a.entries(i, j) - std::conj(a.entries(j, i))) >
          kHermitianTolerance * scale)
        throw InvariantError("matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.entries);
  if (es.info() != Eigen::Success) throw NumericError("eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  rep.min_eigenvalue = ev(0);
  rep.spectral_norm = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  rep.tolerance = rel_tol * rep.spectral_norm;
  rep.psd = rep.min_eigenvalue >= -rep.tolerance;
  if (rep.psd) return rep;

  // Orthonormal basis of the eigenspace of the minimum eigenvalue.
  const double cluster = 1e-12 * rep.spectral_norm;
  Eigen::Index k = 1;
  while (k < n && ev(k) - ev(0) <= cluster) ++k;
  const Eigen::MatrixXcd basis = es.eigenvectors().leftCols(k);
  Eigen::VectorXcd v = basis.col(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXcd proj = basis * basis.row(i).adjoint();
    if (proj.norm() > 1e-6) {
      v = proj;
      break;
    }
  }
  v.normalize();
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::abs(v(big)) / v(big);
  rep.witness = v;
  return rep;
}

}  // namespace cmoment

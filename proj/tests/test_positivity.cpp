#include <doctest.h>

#include "cmoment/error.hpp"
#include "cmoment/extensions.hpp"
#include "cmoment/positivity.hpp"
#include "support.hpp"

using namespace cmoment;
using namespace testing_support;

namespace {

Eigen::Index label_position(const HermitianMatrix& a, Index2 ix) {
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    if (a.labels[i] == ix) return static_cast<Eigen::Index>(i);
  return -1;
}

}  // namespace

TEST_CASE("graded index order") {
  const auto q = quadrant_indices(1);
  REQUIRE(q.size() == 4);
  CHECK(q[0] == Index2{0, 0});
  CHECK(q[1] == Index2{1, 0});
  CHECK(q[2] == Index2{0, 1});
  CHECK(q[3] == Index2{1, 1});
  const auto h = halfplane_indices(1);
  CHECK(h.size() == 6);
  CHECK(h.front() == Index2{1, -1});
}

TEST_CASE("quadrant moment matrices") {
  const HermitianMatrix ones = moment_matrix_quadrant(discrete_moments(DiscreteMeasure::dirac(1.0), 2), 1);
  CHECK(ones.dimension() == 4);
  CHECK((ones.entries.array() == Complex(1.0)).all());
  const PsdReport r1 = is_psd(ones);
  CHECK(r1.psd);
  // rank one: three zero eigenvalues
  CHECK(std::abs(r1.min_eigenvalue) < 1e-12);

  const HermitianMatrix zero = moment_matrix_quadrant(discrete_moments(DiscreteMeasure::dirac(0.0), 2), 1);
  CHECK(zero.entries(0, 0) == Complex(1.0));
  CHECK(zero.entries.cwiseAbs().sum() == 1.0);
  CHECK(is_psd(zero).psd);

  MomentTable bad = discrete_moments(DiscreteMeasure::dirac(0.0), 2);
  bad(1, 1) = -1.0;
  const HermitianMatrix a = moment_matrix_quadrant(bad, 1);
  const PsdReport r = is_psd(a);
  CHECK_FALSE(r.psd);
  REQUIRE(r.witness);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(4);
  e(label_position(a, {1, 0})) = 1.0;
  CHECK(((*r.witness) - e).norm() < 1e-12);

  CHECK_THROWS_AS(moment_matrix_quadrant(bad, 2), RangeError);
}

TEST_CASE("non-Hermitian tables are rejected before the eigensolve") {
  MomentTable g = discrete_moments(DiscreteMeasure::dirac(c(1, 2)), 2);
  g(0, 1) += 0.5;
  CHECK_THROWS_AS(moment_matrix_quadrant(g, 1), InvariantError);
  HermitianMatrix a;
  a.entries = Eigen::MatrixXcd::Zero(2, 2);
  a.entries(0, 1) = 1.0;
  CHECK_THROWS_AS(is_psd(a), InvariantError);
}

TEST_CASE("half-plane moment matrices") {
  ExtendedMomentTable ones(2);
  for (const Index2 ix : ones.indices()) ones(ix.m, ix.n) = 1.0;
  const HermitianMatrix a = moment_matrix_halfplane(ones, 1);
  CHECK(a.dimension() == 6);
  CHECK((a.entries.array() == Complex(1.0)).all());
  CHECK(is_psd(a).psd);

  const auto circle_one = DiscreteMeasure::dirac(1.0, Domain::unit_circle);
  const ExtendedMomentTable kron = build_extension(RepresentingPair(DiscreteMeasure(Domain::punctured_plane), circle_one), 2);
  CHECK(is_psd(moment_matrix_halfplane(kron, 1)).psd);

  const ExtendedMomentTable gi = build_extension(
      RepresentingPair(DiscreteMeasure::dirac(c(0, 1), Domain::punctured_plane), DiscreteMeasure(Domain::unit_circle)), 2);
  CHECK(is_psd(moment_matrix_halfplane(gi, 1)).psd);
  CHECK_THROWS_AS(moment_matrix_halfplane(gi, 2), RangeError);
}

TEST_CASE("psd reports on plain matrices") {
  HermitianMatrix id;
  id.entries = Eigen::MatrixXcd::Identity(3, 3);
  const PsdReport r = is_psd(id);
  CHECK(r.psd);
  CHECK(r.min_eigenvalue == doctest::Approx(1.0));
  CHECK(r.tolerance == doctest::Approx(1e-9));

  HermitianMatrix d;
  d.entries = Eigen::MatrixXcd::Zero(2, 2);
  d.entries(0, 0) = 1.0;
  d.entries(1, 1) = -1.0;
  const PsdReport rd = is_psd(d);
  CHECK_FALSE(rd.psd);
  REQUIRE(rd.witness);
  CHECK(std::abs((*rd.witness)(1) - Complex(1.0)) < 1e-14);
  CHECK(std::abs((*rd.witness)(0)) < 1e-14);

  HermitianMatrix ones;
  ones.entries = Eigen::MatrixXcd::Ones(4, 4);
  const PsdReport ro = is_psd(ones);
  CHECK(ro.psd);
  CHECK(std::abs(ro.min_eigenvalue) < 1e-14);
}

TEST_CASE("Hankel and Toeplitz") {
  const HermitianMatrix h = hankel(HamburgerTable::from_double({1, 0, 1}), 1);
  CHECK(h.entries(0, 0) == Complex(1.0));
  CHECK(h.entries(0, 1) == Complex(0.0));
  CHECK(h.entries(1, 1) == Complex(1.0));
  CHECK(is_psd(h).psd);
  const HermitianMatrix bad = hankel(HamburgerTable::from_double({1, 2, 1}), 1);
  CHECK(bad.entries(0, 1) == Complex(2.0));
  CHECK_FALSE(is_psd(bad).psd);
  CHECK_THROWS_AS(hankel(HamburgerTable::from_double({1, 2}), 1), RangeError);

  const HermitianMatrix t = toeplitz(trig_moments(DiscreteMeasure::dirac(1.0, Domain::unit_circle), 3), 3);
  CHECK((t.entries.array() == Complex(1.0)).all());
  CHECK(is_psd(t).psd);
}

TEST_CASE("property: witness vectors realize the minimum eigenvalue") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(2, 6);
    Eigen::MatrixXcd b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = c(uniform(-1, 1), uniform(-1, 1));
    HermitianMatrix a;
    a.entries = (b + b.adjoint()) / 2.0;
    const PsdReport r = is_psd(a);
    if (r.psd) continue;
    REQUIRE(r.witness);
    const Eigen::VectorXcd& v = *r.witness;
    const double rayleigh = (v.adjoint() * a.entries * v)(0, 0).real();
    CHECK(std::abs(rayleigh - r.min_eigenvalue * v.squaredNorm()) <=
          1e-8 * std::max(1.0, std::abs(r.min_eigenvalue)));
  }
}

TEST_CASE("property: Gram matrices of measures are psd") {
  for (int trial = 0; trial < 60; ++trial) {
    const DiscreteMeasure mu = random_plane_measure(10, 3.0);
    CHECK(is_psd(moment_matrix_quadrant(discrete_moments(mu, 4), 2)).psd);
    const DiscreteMeasure tau = random_real_measure(6, 2.0);
    CHECK(is_psd(hankel(real_moments(tau, 8), 4)).psd);
    const DiscreteMeasure nu = random_circle_measure(6);
    CHECK(is_psd(toeplitz(trig_moments(nu, 5), 5)).psd);
    const RepresentingPair pair(random_plane_measure(6, 2.0, Domain::punctured_plane), random_circle_measure(4));
    CHECK(is_psd(moment_matrix_halfplane(build_extension(pair, 4), 2)).psd);
  }
}

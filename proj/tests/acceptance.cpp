// Acceptance run: one PASS/FAIL line per criterion. Oracles are evaluated
// here from the atoms directly rather than through the library paths under test.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cmoment/demos.hpp"
#include "cmoment/extensions.hpp"
#include "cmoment/geometry.hpp"
#include "cmoment/positivity.hpp"
#include "cmoment/recovery.hpp"
#include "cmoment/sequences.hpp"
#include "support.hpp"

using namespace cmoment;
using namespace testing_support;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Records the first failure and keeps a running summary.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && passed_) {
      passed_ = false;
      first_failure_ = what;
    }
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }
  Outcome done() const {
    return {passed_, passed_ ? notes_.str() : "first failure: " + first_failure_ + " | " + notes_.str()};
  }

 private:
  bool passed_ = true;
  std::string first_failure_;
  std::ostringstream notes_;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Complex trig_oracle(const DiscreteMeasure& nu, int n) {
  Complex total = 0.0;
  for (const auto& a : nu.atoms()) total += a.weight * std::pow(a.location, n);
  return total;
}

DiscreteMeasure random_punctured(int max_atoms, double radius) {
  return random_plane_measure(max_atoms, radius, Domain::punctured_plane);
}

Outcome gram_positivity() {
  Tally t;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const DiscreteMeasure mu = random_plane_measure(10, 3.0);
    const PsdReport r = is_psd(moment_matrix_quadrant(discrete_moments(mu, 6), 3));
    worst = std::min(worst, r.min_eigenvalue / r.spectral_norm);
    t.require(r.min_eigenvalue >= -1e-9 * r.spectral_norm, "quadrant trial " + std::to_string(trial));
  }
  double worst_half = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const RepresentingPair pair(random_punctured(10, 3.0), random_circle_measure(4));
    const PsdReport r = is_psd(moment_matrix_halfplane(build_extension(pair, 4), 2));
    worst_half = std::min(worst_half, r.min_eigenvalue / r.spectral_norm);
    t.require(r.min_eigenvalue >= -1e-9 * r.spectral_norm, "half-plane trial " + std::to_string(trial));
  }
  t.note("min eig/norm quadrant " + sci(worst) + ", half-plane " + sci(worst_half));
  return t.done();
}

Outcome restriction_consistency() {
  Tally t;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const RepresentingPair pair(random_punctured(6, 2.0), random_circle_measure(4));
    const int w = uniform_int(1, 5);
    const MomentTable small = restrict(build_extension(pair, w));
    const DiscreteMeasure whole = pair_to_measure(pair);
    const MomentTable direct = discrete_moments(whole, w);
    for (int m = 0; m <= w; ++m)
      for (int n = 0; n <= w; ++n) {
        // oracle also checks the atom at 0 carries nu's mass
        const Complex o = moment_oracle(pair.mu(), m, n) + (m + n == 0 ? pair.nu().total_mass() : 0.0);
        const double scale = 1.0 + std::abs(o);
        const double e = std::max(std::abs(small(m, n) - direct(m, n)), std::abs(small(m, n) - o)) / scale;
        worst = std::max(worst, e);
        t.require(e <= 1e-10, "pair " + std::to_string(trial) + " entry (" + std::to_string(m) + "," +
                                  std::to_string(n) + ")");
      }
  }
  t.note("max relative difference " + sci(worst));
  return t.done();
}

Outcome snu2_family_check() {
  Tally t;
  const DiscreteMeasure mu(Domain::complex_plane, {{c(0), 0.5}, {c(2), 0.5}});
  const double alpha = 0.5;
  const std::vector<double> ts = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<ExtendedMomentTable> tables;
  for (double s : ts) tables.push_back(snu2_family(mu, s, 4));
  const MomentTable q0 = restrict(tables[0]);
  double quadrant_gap = 0.0, oracle_gap = 0.0, min_sep = 1e300;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const MomentTable q = restrict(tables[i]);
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) quadrant_gap = std::max(quadrant_gap, std::abs(q(m, n) - q0(m, n)));
    // the atom at 2 contributes 1/2 * 2/2; the atom at 0 is moved to the
    // circle as t * alpha delta_1 + (1 - t) * alpha delta_i
    const Complex oracle = 0.5 * (2.0 / 2.0) + alpha * (2 * ts[i] - 1);
    oracle_gap = std::max(oracle_gap, std::abs(tables[i](1, -1) - oracle));
    for (std::size_t j = 0; j < i; ++j)
      min_sep = std::min(min_sep, std::abs(tables[i](1, -1) - tables[j](1, -1)));
  }
  t.require(quadrant_gap <= 1e-12, "quadrant parts differ");
  t.require(oracle_gap <= 1e-12, "Gamma_t(1,-1) misses the oracle");
  t.require(min_sep > 1e-6, "two tables coincide at (1,-1)");
  t.note("quadrant gap " + sci(quadrant_gap) + ", oracle gap " + sci(oracle_gap) +
         ", min separation at (1,-1) " + sci(min_sep) +
         "; oracle 1/2 + alpha(2t-1), the atom at 2 plus the split atom at 0");
  return t.done();
}

Outcome null_direction() {
  Tally t;
  const DiscreteMeasure mu = DiscreteMeasure::dirac(2.0);
  std::vector<Atom> lebesgue;
  for (int k = 0; k < 64; ++k) lebesgue.push_back({std::polar(1.0, 2 * M_PI * k / 64), 1.0 / 64});
  const std::vector<DiscreteMeasure> profiles = {DiscreteMeasure::dirac(1.0, Domain::unit_circle),
                                                 DiscreteMeasure::dirac(c(0, 1), Domain::unit_circle),
                                                 DiscreteMeasure(Domain::unit_circle, lebesgue)};
  std::vector<ExtendedMomentTable> tables;
  for (const auto& p : profiles) tables.push_back(build_extension(measure_to_pair(mu, p), 6));
  double gap = 0.0;
  for (const auto& idx : tables[0].indices())
    for (std::size_t k = 1; k < tables.size(); ++k)
      gap = std::max(gap, std::abs(tables[k](idx.m, idx.n) - tables[0](idx.m, idx.n)));
  double oracle_gap = 0.0;
  for (const auto& idx : tables[0].indices())
    oracle_gap = std::max(oracle_gap, std::abs(tables[0](idx.m, idx.n) -
                                               std::pow(2.0, idx.m + idx.n)));
  t.require(gap <= 1e-12, "profiles give different tables");
  t.require(oracle_gap <= 1e-12 * std::pow(2.0, 12), "table differs from 2^{m+n}");
  t.note("max entry difference " + sci(gap) + " over " + std::to_string(tables[0].indices().size()) +
         " entries");
  return t.done();
}

Outcome quasi_determinacy() {
  Tally t;
  const DiscreteMeasure mu_prime(Domain::punctured_plane, {{c(1, 1), 0.3}, {c(-0.5, 2), 0.4}, {c(2), 0.2}});
  const double alpha = 0.7;
  const RepresentingPair a(mu_prime, DiscreteMeasure::dirac(1.0, Domain::unit_circle, alpha));
  const RepresentingPair b(mu_prime, DiscreteMeasure(Domain::unit_circle, {{c(1), alpha / 2}, {c(-1), alpha / 2}}));
  const QuasiDeterminacyResidual same = quasi_det_residual(a, b, 8);
  t.require(same.max <= 1e-12, "residual between the two profiles exceeds 1e-12");

  const RepresentingPair e1(DiscreteMeasure(Domain::punctured_plane), DiscreteMeasure::dirac(1.0, Domain::unit_circle));
  const RepresentingPair ei(DiscreteMeasure(Domain::punctured_plane),
                            DiscreteMeasure::dirac(c(0, 1), Domain::unit_circle));
  const QuasiDeterminacyResidual diff = quasi_det_residual(e1, ei, 1);
  const double at_one = diff.per_order.at(2);  // n = -1, 0, 1
  // oracle: phi moves delta_i to delta_{-1}, whose first moment is -1
  const double oracle = std::abs(trig_oracle(DiscreteMeasure::dirac(1.0, Domain::unit_circle), 1) -
                                 trig_oracle(DiscreteMeasure::dirac(-1.0, Domain::unit_circle), 1));
  t.require(std::abs(at_one - 2.0) <= 1e-12 && std::abs(oracle - 2.0) <= 1e-12, "residual at n = 1 is not 2");
  t.note("D = 8 residual " + sci(same.max) + ", n = 1 residual " + std::to_string(at_one));
  return t.done();
}

DiscreteMeasure random_on_roots(int r, bool with_zero) {
  std::vector<Atom> atoms;
  const int n = uniform_int(1, 6);
  for (int k = 0; k < n; ++k)
    atoms.push_back({std::polar(1.0, 2 * M_PI * uniform_int(0, r - 1) / r), uniform(0.1, 1)});
  if (with_zero) atoms.push_back({c(0), uniform(0.1, 1)});
  return DiscreteMeasure(Domain::complex_plane, atoms);
}

Outcome uniform_round_trip() {
  Tally t;
  int tables = 0;
  for (int r = 1; r <= 6; ++r)
    for (int trial = 0; trial < 10; ++trial, ++tables) {
      const MomentTable g = discrete_moments(random_on_roots(r, trial % 2 == 0), 6);
      const int l = r > 1 ? r - 1 : 1;
      t.require(check_flatness(g, 1, l).status == FlatnessStatus::confirmed_on_window,
                "roots of order " + std::to_string(r));
    }
  for (int trial = 0; trial < 10; ++trial, tables += 2) {
    t.require(check_flatness(discrete_moments(random_circle_measure(6), 6), 1, -1).status ==
                  FlatnessStatus::confirmed_on_window,
              "circle measure");
    t.require(check_flatness(discrete_moments(random_real_measure(6, 3.0), 6), 1, 1).status ==
                  FlatnessStatus::confirmed_on_window,
              "real measure");
  }
  using Kind = SupportClass::Kind;
  const std::vector<SupportClass> classes = {{Kind::zero_and_roots, 1, false},
                                             {Kind::zero_and_roots, 4, false},
                                             {Kind::circle, 1, true},
                                             {Kind::real_line, 1, false}};
  for (const auto& cls : classes) {
    const auto [k, l] = flatness_for_support(cls);
    t.require(support_contains(classify_flat_support(k, l), cls),
              "class does not survive flatness_for_support then classify_flat_support");
  }
  for (int r = 2; r <= 6; ++r)
    t.require(flatness_for_support(classify_flat_support(1, r - 1)) == std::pair{1, r - 1},
              "(1, r-1) does not come back");
  t.note(std::to_string(tables) + " random tables confirmed flat; 4 classes round trip by containment");
  return t.done();
}

Outcome injectivity_catalog() {
  Tally t;
  std::ostringstream witnesses;
  for (const auto& cv : curve_catalog()) {
    const InjectivityVerdict v = psi_injectivity_sample_test(cv, 500);
    const bool expect = cv.name == "unit-circle" || cv.name == "parabola";
    t.require(v.violated == expect, cv.name + (expect ? " shows no violation" : " shows a violation"));
    if (!v.violated) continue;
    const InjectivityVerdict again = psi_injectivity_sample_test(cv, 500);
    t.require(again.witness && v.witness && again.witness->first == v.witness->first &&
                  again.witness->second == v.witness->second,
              cv.name + " witness not reproducible");
    if (!v.witness) continue;
    const auto [z1, z2] = *v.witness;
    const Complex p1 = z1 / std::conj(z1), p2 = z2 / std::conj(z2);
    t.require(std::abs(z1 - z2) > 1e-6 && std::abs(p1 - p2) <= 1e-10, cv.name + " witness is not a collision");
    t.require(std::abs(cv.implicit(z1.real(), z1.imag())) <= 1e-10 &&
                  std::abs(cv.implicit(z2.real(), z2.imag())) <= 1e-10,
              cv.name + " witness is off the curve");
    witnesses << cv.name << " (" << z1.real() << "," << z1.imag() << ")~(" << z2.real() << ","
              << z2.imag() << ") ";
  }
  t.note("witnesses: " + witnesses.str());
  return t.done();
}

MomentTable random_hermitian(int degree) {
  MomentTable g(degree);
  for (int m = 0; m <= degree; ++m)
    for (int n = m; n <= degree; ++n) {
      const Complex v = m == n ? c(uniform(0.1, 1)) : random_point(1.0);
      g(m, n) = v;
      g(n, m) = std::conj(v);
    }
  return g;
}

Outcome conversion_round_trip() {
  Tally t;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    // a degree-10 table fixes all real moments through total degree 10, which
    // in turn fix the complex table of degree 5
    const MomentTable g = random_hermitian(10);
    const RealMomentTable2D a = complex_to_real2d(g);
    const MomentTable back = real2d_to_complex(a);
    t.require(back.degree() == 5, "complex table of degree 5 expected");
    double scale = 0.0, diff = 0.0;
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; n <= 5; ++n) {
        scale = std::max(scale, std::abs(g(m, n)));
        diff = std::max(diff, std::abs(back(m, n) - g(m, n)));
      }
    const RealMomentTable2D a2 = complex_to_real2d(back);
    double rscale = 0.0, rdiff = 0.0;
    for (int k = 0; k <= 5; ++k)
      for (int l = 0; k + l <= 5; ++l) {
        rscale = std::max(rscale, std::abs(a(k, l)));
        rdiff = std::max(rdiff, std::abs(a2(k, l) - a(k, l)));
      }
    const double e = std::max(diff / scale, rdiff / rscale);
    worst = std::max(worst, e);
    t.require(e <= 1e-12, "round trip " + std::to_string(trial));
  }
  double direct_worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const DiscreteMeasure mu = random_plane_measure(8, 2.0);
    const RealMomentTable2D via = complex_to_real2d(discrete_moments(mu, 5));
    double scale = 0.0, diff = 0.0;
    for (int k = 0; k <= 5; ++k)
      for (int l = 0; k + l <= 5; ++l) {
        double o = 0.0;
        for (const auto& at : mu.atoms())
          o += at.weight * std::pow(at.location.real(), k) * std::pow(at.location.imag(), l);
        scale = std::max(scale, std::abs(o));
        diff = std::max(diff, std::abs(via(k, l) - o));
      }
    const MomentTable back = real2d_to_complex(plane_moments(mu.retagged(Domain::real_plane), 10));
    const MomentTable direct = discrete_moments(mu, 5);
    double cscale = 0.0, cdiff = 0.0;
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; n <= 5; ++n) {
        cscale = std::max(cscale, std::abs(direct(m, n)));
        cdiff = std::max(cdiff, std::abs(back(m, n) - direct(m, n)));
      }
    const double e = std::max(diff / scale, cdiff / cscale);
    direct_worst = std::max(direct_worst, e);
    t.require(e <= 1e-12, "plane measure " + std::to_string(trial));
  }
  t.note("round trip max relative " + sci(worst) + ", against direct sums " + sci(direct_worst) +
         "; relative to the largest entry, over the degree-5 triangle");
  return t.done();
}

Outcome gauss_recovery() {
  Tally t;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = uniform_int(1, 8);
    std::vector<Atom> atoms;
    for (int k = 0; k < n; ++k)
      atoms.push_back({c(-2 + 4.0 * (k + uniform(0.25, 0.75)) / n), uniform(0.2, 1.0)});
    const DiscreteMeasure tau(Domain::real_line, atoms);
    HamburgerTable s;
    {
      PrecisionScope scope(kDefaultDigits);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        Real v = 0;
        for (const auto& a : atoms) v += Real(a.weight) * pow(Real(a.location.real()), k);
        s.s.push_back(v);
      }
    }
    const DiscreteMeasure back = recover_atomic(s, n);
    const double e = max_atom_discrepancy(back, tau);
    worst = std::max(worst, e);
    t.require(e <= 1e-8, "measure " + std::to_string(trial) + " with " + std::to_string(n) + " atoms");
  }
  t.note("max relative location/weight error " + sci(worst));
  return t.done();
}

Outcome stieltjes_family() {
  Tally t;
  double worst = 0.0, worst_pert = 0.0;
  for (int n = 0; n <= 8; ++n) {
    const double exact = std::exp((n + 1.0) * (n + 1.0) / 4.0);
    for (double lambda : {-1.0, 0.0, 1.0}) {
      const double v = static_cast<double>(stieltjes_moment(n, lambda).value);
      const double e = std::abs(v - exact) / exact;
      worst = std::max(worst, e);
      t.require(e <= 1e-8, "n = " + std::to_string(n));
    }
    const double p = std::abs(static_cast<double>(stieltjes_perturbation(n).value)) / exact;
    worst_pert = std::max(worst_pert, p);
    t.require(p <= 1e-8, "perturbation at n = " + std::to_string(n));
  }
  t.note("max relative error " + sci(worst) + ", max perturbation/closed form " + sci(worst_pert));
  return t.done();
}

Outcome dc1_suite() {
  Tally t;
  const Dc1Configuration cfg = dc1_example();
  const Dc1Report rep = dc1_property_suite(cfg.mu, cfg.nu1, cfg.nu2, cfg.degree, cfg.zariski_degree);
  t.require(rep.shared_moments.passed, "shared moments: " + rep.shared_moments.detail);
  t.require(rep.no_mass_on_axis.passed, "axis mass: " + rep.no_mass_on_axis.detail);
  t.require(rep.zariski_dense.passed, "density: " + rep.zariski_dense.detail);
  // oracle for the first check: products of real moments
  double worst = 0.0;
  for (int k = 0; k <= cfg.degree; ++k)
    for (int l = 0; k + l <= cfg.degree; ++l) {
      double a1 = 0, a2 = 0, mk = 0;
      for (const auto& a : cfg.mu.atoms()) mk += a.weight * std::pow(a.location.real(), k);
      for (const auto& a : cfg.nu1.atoms()) a1 += a.weight * std::pow(a.location.real(), l);
      for (const auto& a : cfg.nu2.atoms()) a2 += a.weight * std::pow(a.location.real(), l);
      worst = std::max(worst, std::abs(mk * (a1 - a2)) / (1 + std::abs(mk * a1)));
    }
  t.require(worst <= 1e-12, "independent product moments differ");
  t.note("degree " + std::to_string(cfg.degree) + ", moment gap " + sci(rep.shared_moments.value) +
         ", axis mass " + sci(rep.no_mass_on_axis.value) + ", sigma ratio " + sci(rep.zariski_dense.value) +
         " at degree " + std::to_string(cfg.zariski_degree));
  return t.done();
}

Outcome distinct_extensions() {
  Tally t;
  const demos::ShiftedPair p = demos::shifted_gauss_pair(2);
  const ExtendedMomentTable g1 = build_extension(RepresentingPair(p.mu1, DiscreteMeasure(Domain::unit_circle)), 4);
  const ExtendedMomentTable g2 = build_extension(RepresentingPair(p.mu2, DiscreteMeasure(Domain::unit_circle)), 4);
  double best = 0.0, oracle_gap = 0.0;
  int at = 0;
  for (int m = -4; m <= 4; ++m) {
    Complex o1 = 0.0, o2 = 0.0;
    for (const auto& a : p.mu1.atoms()) o1 += a.weight * std::pow(a.location / std::conj(a.location), m);
    for (const auto& a : p.mu2.atoms()) o2 += a.weight * std::pow(a.location / std::conj(a.location), m);
    oracle_gap = std::max({oracle_gap, std::abs(g1(m, -m) - o1), std::abs(g2(m, -m) - o2)});
    if (std::abs(o1 - o2) > best) {
      best = std::abs(o1 - o2);
      at = m;
    }
  }
  t.require(oracle_gap <= 1e-12, "extension entries miss the direct psi moments");
  t.require(best > 1e-6, "tables agree on the whole anti-diagonal");
  t.require(!approx_equal(p.mu1, p.mu2), "measures coincide");
  t.note("largest (m,-m) gap " + sci(best) + " at m = " + std::to_string(at) + ", oracle agreement " +
         sci(oracle_gap));
  return t.done();
}

Outcome shifted_indeterminacy() {
  Tally t;
  const demos::ShiftedPair p = demos::shifted_gauss_pair(2);
  const ZPolynomial line = demos::horizontal_line_polynomial();
  const double r1 = localization_residual(p.mu1, line), r2 = localization_residual(p.mu2, line);
  t.require(r1 <= 1e-12 && r2 <= 1e-12, "shifted measures leave the line R + i");
  for (const auto* mu : {&p.mu1, &p.mu2})
    for (const auto& a : mu->atoms())
      t.require(std::abs(a.location.imag() - 1.0) <= 1e-12, "atom off the line R + i");
  const MomentTable q1 = discrete_moments(p.mu1, p.shared_order), q2 = discrete_moments(p.mu2, p.shared_order);
  double gap = 0.0;
  for (int m = 0; m <= p.shared_order; ++m)
    for (int n = 0; m + n <= p.shared_order; ++n) {
      const Complex o1 = moment_oracle(p.mu1, m, n), o2 = moment_oracle(p.mu2, m, n);
      gap = std::max({gap, std::abs(q1(m, n) - q2(m, n)) / (1 + std::abs(o1)), std::abs(o1 - o2) / (1 + std::abs(o1))});
    }
  const double beyond = std::abs(moment_oracle(p.mu1, p.shared_order + 1, 0) -
                                 moment_oracle(p.mu2, p.shared_order + 1, 0));
  t.require(gap <= 1e-10, "quadrant tables differ below the shared order");
  t.require(beyond > 1e-6, "tables also agree past the shared order");
  t.require(!approx_equal(p.mu1, p.mu2), "measures coincide");
  t.note("residuals " + sci(r1) + ", " + sci(r2) + "; shared through total degree " +
         std::to_string(p.shared_order) + " (gap " + sci(gap) + "), first gap beyond " + sci(beyond));
  return t.done();
}

Outcome agnesi_structure() {
  Tally t;
  const auto apex = agnesi_fiber(1, 1, 1);
  t.require(apex.size() == 1 && std::abs(apex[0] - c(0, 1)) <= 1e-14, "apex fiber");
  const auto half = agnesi_fiber(1, 1, 0.5);
  t.require(half.size() == 2 && std::abs(half[0] - c(1, 0.5)) <= 1e-14 && std::abs(half[1] - c(-1, 0.5)) <= 1e-14,
            "fiber at 1/2");
  const auto fifth = agnesi_fiber(1, 1, 0.2);
  t.require(fifth.size() == 2 && std::abs(fifth[0] - c(2, 0.2)) <= 1e-14 && std::abs(fifth[1] - c(-2, 0.2)) <= 1e-14,
            "fiber at 1/5");
  std::vector<Atom> atoms;
  for (const auto* f : {&apex, &half, &fifth})
    for (Complex z : *f) atoms.push_back({z, 1.0 / 5});
  const DiscreteMeasure mu(Domain::complex_plane, atoms);
  const Curve witch = curves::agnesi(1, 1);
  const double r = localization_residual(mu, witch);
  double direct = 0.0;
  for (const auto& a : atoms) {
    const double x = a.location.real(), y = a.location.imag();
    direct = std::max(direct, std::abs(y * (x * x + 1) - 1));
  }
  t.require(r <= 1e-12 && direct <= 1e-12, "fiber measure leaves the witch");
  t.note(std::to_string(mu.size()) + " atoms, residual " + sci(r));
  return t.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"gram positivity", gram_positivity},
      {"restriction of extensions", restriction_consistency},
      {"convex family of extensions", snu2_family_check},
      {"extension independent of circle profile", null_direction},
      {"circle transport residual", quasi_determinacy},
      {"flatness and support classes", uniform_round_trip},
      {"injectivity catalog", injectivity_catalog},
      {"complex/real 2-D conversion", conversion_round_trip},
      {"Gauss recovery", gauss_recovery},
      {"log-normal moment family", stieltjes_family},
      {"tensor construction properties", dc1_suite},
      {"distinct extensions on an injective curve", distinct_extensions},
      {"shifted indeterminacy", shifted_indeterminacy},
      {"Witch of Agnesi fibers", agnesi_structure},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), secs);
  return failed ? 1 : 0;
}

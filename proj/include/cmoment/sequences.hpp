#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmoment/tables.hpp"

namespace cmoment {

inline constexpr double kFlatnessTolerance = 1e-10;
inline constexpr double kExtensionTolerance = 1e-10;

// gamma_{m,n} = s_{m+n}; needs s_0..s_{2D}.
MomentTable from_hamburger(const HamburgerTable& s, int degree);
// gamma_{m,n} = s_{m-n}; needs trigonometric degree >= D.
MomentTable from_herglotz(const HerglotzTable& s, int degree);

// Gaussian-integer coefficients of a bivariate form of fixed total degree t:
// entry j is the coefficient of x^{t-j} y^j.
struct GaussianInt {
  long long re = 0;
  long long im = 0;
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};
using BinaryForm = std::vector<GaussianInt>;

// (x + iy)^m (x - iy)^n expanded exactly.
BinaryForm complex_monomial_in_xy(int m, int n);
// (z + zbar)^k (z - zbar)^l expanded exactly; entry j is the coefficient of
// z^{t-j} zbar^j with t = k + l.
BinaryForm real_monomial_in_z(int k, int l);

// Real 2-D moments a_{k,l}, k + l <= D, from a Hermitian table of degree D.
// Throws InvariantError for non-Hermitian input.
RealMomentTable2D complex_to_real2d(const MomentTable& gamma);
// Complex table of the largest degree D with 2D <= known total degree of a.
MomentTable real2d_to_complex(const RealMomentTable2D& a);

enum class FlatnessStatus { confirmed_on_window, violated };

struct FlatnessCertificate {
  int k = 0;
  int l = 0;
  int window = 0;
  FlatnessStatus status = FlatnessStatus::confirmed_on_window;
  // Two in-window indices on one line k m + l n = c with different values.
  std::optional<std::pair<Index2, Index2>> witness;
};

// Flatness of gamma on every Diophantine line k m + l n = c inside the
// table, for 0 <= k <= K and -K <= l <= K.
std::vector<FlatnessCertificate> detect_flatness(const MomentTable& gamma, int K);
FlatnessCertificate check_flatness(const MomentTable& gamma, int k, int l);

// Quadrant part of an extended table (degree = window).
MomentTable restrict(const ExtendedMomentTable& big);

struct ExtensionCheck {
  bool extends = false;
  double max_difference = 0.0;
  std::optional<Index2> witness;
};

ExtensionCheck is_extension(const ExtendedMomentTable& big,
                            const MomentTable& gamma,
                            double rel_tol = kExtensionTolerance);

}  // namespace cmoment

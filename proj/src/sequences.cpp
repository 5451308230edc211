#include "cmoment/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "cmoment/error.hpp"

namespace cmoment {

MomentTable from_hamburger(const HamburgerTable& s, int degree) {
  if (degree < 0) throw RangeError("degree must be nonnegative");
  if (s.length() < 2 * degree)
    throw RangeError("Hamburger sequence of length " + std::to_string(s.length()) +
                     " cannot fill degree " + std::to_string(degree));
  MomentTable g(degree);
  for (int m = 0; m <= degree; ++m)
    for (int n = 0; n <= degree; ++n)
      g(m, n) = Complex(static_cast<double>(s.s[m + n]), 0.0);
  return g;
}

MomentTable from_herglotz(const HerglotzTable& s, int degree) {
  if (degree < 0) throw RangeError("degree must be nonnegative");
  if (s.degree() < degree)
    throw RangeError("Herglotz sequence of degree " + std::to_string(s.degree()) +
                     " cannot fill degree " + std::to_string(degree));
  MomentTable g(degree);
  for (int m = 0; m <= degree; ++m)
    for (int n = 0; n <= degree; ++n) g(m, n) = s[m - n];
  return g;
}

namespace {

GaussianInt mul(GaussianInt a, GaussianInt b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt add(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }

// form * (p x + q y), with the linear factor given by (p, q).
BinaryForm times_linear(const BinaryForm& f, GaussianInt p, GaussianInt q) {
  BinaryForm out(f.size() + 1);
  for (std::size_t j = 0; j < f.size(); ++j) {
    out[j] = add(out[j], mul(f[j], p));
    out[j + 1] = add(out[j + 1], mul(f[j], q));
  }
  return out;
}

Complex to_complex(GaussianInt g) {
  return {static_cast<double>(g.re), static_cast<double>(g.im)};
}

}  // namespace

BinaryForm complex_monomial_in_xy(int m, int n) {
  if (m < 0 || n < 0) throw RangeError("exponents must be nonnegative");
  if (m + n > 60) throw RangeError("total degree too large for exact expansion");
  BinaryForm f{GaussianInt{1, 0}};
  for (int i = 0; i < m; ++i) f = times_linear(f, {1, 0}, {0, 1});
  for (int i = 0; i < n; ++i) f = times_linear(f, {1, 0}, {0, -1});
  return f;
}

BinaryForm real_monomial_in_z(int k, int l) {
  if (k < 0 || l < 0) throw RangeError("exponents must be nonnegative");
  if (k + l > 60) throw RangeError("total degree too large for exact expansion");
  BinaryForm f{GaussianInt{1, 0}};
  for (int i = 0; i < k; ++i) f = times_linear(f, {1, 0}, {1, 0});
  for (int i = 0; i < l; ++i) f = times_linear(f, {1, 0}, {-1, 0});
  return f;
}

RealMomentTable2D complex_to_real2d(const MomentTable& gamma) {
  gamma.require_hermitian();
  const int D = gamma.degree();
  RealMomentTable2D a(D);
  // x^k y^l = 2^{-t} i^{-l} (z + zbar)^k (z - zbar)^l, t = k + l
  const double tol = 1e-10 * std::max(1.0, gamma.max_abs());
  for (int t = 0; t <= D; ++t) {
    const double scale = std::ldexp(1.0, -t);
    for (int k = 0; k <= t; ++k) {
      const int l = t - k;
      const BinaryForm c = real_monomial_in_z(k, l);
      Complex sum = 0.0;
      for (int j = 0; j <= t; ++j) sum += to_complex(c[j]) * gamma(t - j, j);
      Complex i_pow = 1.0;
      for (int r = 0; r < l % 4; ++r) i_pow *= Complex(0.0, -1.0);
      const Complex v = scale * i_pow * sum;
      if (std::abs(v.imag()) > tol)
        throw InvariantError("real 2-D moment came out complex; table not Hermitian");
      a.set(k, l, v.real());
    }
  }
  return a;
}

MomentTable real2d_to_complex(const RealMomentTable2D& a) {
  const int T = a.total_degree_known();
  if (T < 0) throw RangeError("2-D table has no usable entries");
  const int D = T / 2;
  MomentTable g(D);
  for (int m = 0; m <= D; ++m)
    for (int n = 0; n <= D; ++n) {
      const BinaryForm alpha = complex_monomial_in_xy(m, n);
      const int t = m + n;
      Complex sum = 0.0;
      for (int j = 0; j <= t; ++j) sum += to_complex(alpha[j]) * a(t - j, j);
      g(m, n) = sum;
    }
  return g;
}

FlatnessCertificate check_flatness(const MomentTable& gamma, int k, int l) {
  if (k < 0) throw DomainError("flatness needs k >= 0");
  FlatnessCertificate cert;
  cert.k = k;
  cert.l = l;
  cert.window = gamma.degree();
  const double tol = kFlatnessTolerance * (1.0 + gamma.max_abs());
  std::map<long long, Index2> first_on_line;
  for (int m = 0; m <= gamma.degree(); ++m)
    for (int n = 0; n <= gamma.degree(); ++n) {
      const long long c = static_cast<long long>(k) * m + static_cast<long long>(l) * n;
      auto [it, fresh] = first_on_line.emplace(c, Index2{m, n});
      if (fresh) continue;
      const Index2 ref = it->second;
      if (std::abs(gamma(m, n) - gamma(ref.m, ref.n)) > tol) {
        cert.status = FlatnessStatus::violated;
        cert.witness = std::make_pair(ref, Index2{m, n});
        return cert;
      }
    }
  return cert;
}

std::vector<FlatnessCertificate> detect_flatness(const MomentTable& gamma, int K) {
  if (K < 0) throw RangeError("search bound must be nonnegative");
  std::vector<FlatnessCertificate> out;
  for (int k = 0; k <= K; ++k)
    for (int l = -K; l <= K; ++l) out.push_back(check_flatness(gamma, k, l));
  return out;
}

MomentTable restrict(const ExtendedMomentTable& big) {
  MomentTable g(big.window());
  for (int m = 0; m <= big.window(); ++m)
    for (int n = 0; n <= big.window(); ++n) g(m, n) = big(m, n);
  return g;
}

ExtensionCheck is_extension(const ExtendedMomentTable& big,
                            const MomentTable& gamma, double rel_tol) {
  if (big.window() < gamma.degree())
    throw RangeError("extension window smaller than table degree");
  ExtensionCheck out;
  const double tol = rel_tol * std::max(1.0, gamma.max_abs());
  for (int m = 0; m <= gamma.degree(); ++m)
    for (int n = 0; n <= gamma.degree(); ++n) {
      const double d = std::abs(big(m, n) - gamma(m, n));
      if (d > out.max_difference) {
        out.max_difference = d;
        if (d > tol && !out.witness) out.witness = Index2{m, n};
      }
    }
  out.extends = !out.witness.has_value();
  return out;
}

}  // namespace cmoment

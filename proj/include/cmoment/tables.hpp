#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "cmoment/precision.hpp"

namespace cmoment {

using Complex = std::complex<double>;

// Lattice index (m, n).
struct Index2 {
  int m = 0;
  int n = 0;
  friend bool operator==(const Index2&, const Index2&) = default;
};

// Truncated complex moment sequence gamma_{m,n}, 0 <= m,n <= degree.
class MomentTable {
 public:
  MomentTable() = default;
  explicit MomentTable(int degree);

  int degree() const noexcept { return degree_; }
  const Complex& operator()(int m, int n) const;
  Complex& operator()(int m, int n);

  // Largest entry modulus.
  double max_abs() const;
  // First (m, n) with |gamma_{n,m} - conj(gamma_{m,n})| above tol, if any.
  std::optional<Index2> hermitian_violation(double rel_tol = 1e-12) const;
  // Throws InvariantError unless Hermitian with real nonnegative gamma_{0,0}.
  void require_hermitian(double rel_tol = 1e-12) const;

 private:
  int degree_ = -1;
  std::vector<Complex> data_;
};

// Truncated sequence Gamma_{m,n} on the half-plane lattice m + n >= 0,
// restricted to the window max(|m|, |n|) <= window.
class ExtendedMomentTable {
 public:
  ExtendedMomentTable() = default;
  explicit ExtendedMomentTable(int window);

  int window() const noexcept { return window_; }
  static bool in_lattice(int m, int n) noexcept { return m + n >= 0; }
  bool contains(int m, int n) const noexcept;
  const Complex& operator()(int m, int n) const;
  Complex& operator()(int m, int n);

  // In-window lattice indices ordered by m, then n.
  std::vector<Index2> indices() const;
  double max_abs() const;

 private:
  std::size_t offset(int m, int n) const;

  int window_ = -1;
  std::vector<Complex> data_;
};

// Real Hamburger moments s_0..s_L, held at working precision.
struct HamburgerTable {
  std::vector<Real> s;

  int length() const noexcept { return static_cast<int>(s.size()) - 1; }
  std::vector<double> to_double() const;
  static HamburgerTable from_double(const std::vector<double>& values);
};

// Trigonometric moments s_n, |n| <= degree, with s_{-n} = conj(s_n).
class HerglotzTable {
 public:
  HerglotzTable() = default;
  explicit HerglotzTable(int degree);

  int degree() const noexcept { return degree_; }
  const Complex& operator[](int n) const;
  Complex& operator[](int n);
  bool is_hermitian(double tol = 1e-12) const;

 private:
  int degree_ = -1;
  std::vector<Complex> data_;
};

// Two-dimensional real moments a_{k,l}, 0 <= k,l <= degree. Not every entry
// has to be known: conversions from complex data only determine the
// total-degree triangle.
class RealMomentTable2D {
 public:
  RealMomentTable2D() = default;
  explicit RealMomentTable2D(int degree);

  int degree() const noexcept { return degree_; }
  bool known(int k, int l) const;
  double operator()(int k, int l) const;
  void set(int k, int l, double value);

  // Largest T such that every a_{k,l} with k + l <= T is known.
  int total_degree_known() const;

 private:
  int degree_ = -1;
  std::vector<double> data_;
  std::vector<char> known_;
};

}  // namespace cmoment

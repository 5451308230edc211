#include "cmoment/tables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmoment/error.hpp"

namespace cmoment {

namespace {

std::string idx(int m, int n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

MomentTable::MomentTable(int degree) : degree_(degree) {
  if (degree < 0) throw RangeError("moment table degree must be nonnegative");
  data_.assign(static_cast<std::size_t>(degree + 1) * (degree + 1), Complex{});
}

const Complex& MomentTable::operator()(int m, int n) const {
  if (m < 0 || n < 0 || m > degree_ || n > degree_)
    throw RangeError("moment index " + idx(m, n) + " outside degree " +
                     std::to_string(degree_));
  return data_[static_cast<std::size_t>(m) * (degree_ + 1) + n];
}

Complex& MomentTable::operator()(int m, int n) {
  return const_cast<Complex&>(std::as_const(*this)(m, n));
}

double MomentTable::max_abs() const {
  double r = 0.0;
  for (const auto& v : data_) r = std::max(r, std::abs(v));
  return r;
}

std::optional<Index2> MomentTable::hermitian_violation(double rel_tol) const {
  const double tol = rel_tol * std::max(1.0, max_abs());
  for (int m = 0; m <= degree_; ++m)
    for (int n = m; n <= degree_; ++n)
      if (std::abs((*this)(n, m) - std::conj((*this)(m, n))) > tol)
        return Index2{m, n};
  return std::nullopt;
}

void MomentTable::require_hermitian(double rel_tol) const {
  if (degree_ < 0) throw InvariantError("empty moment table");
  if (auto bad = hermitian_violation(rel_tol))
    throw InvariantError("moment table is not Hermitian at " +
                         idx(bad->m, bad->n));
  const double tol = rel_tol * std::max(1.0, max_abs());
  if ((*this)(0, 0).real() < -tol)
    throw InvariantError("gamma_{0,0} must be nonnegative");
}

ExtendedMomentTable::ExtendedMomentTable(int window) : window_(window) {
  if (window < 0) throw RangeError("window must be nonnegative");
  data_.assign(static_cast<std::size_t>(2 * window + 1) * (2 * window + 1),
               Complex{});
}

bool ExtendedMomentTable::contains(int m, int n) const noexcept {
  return in_lattice(m, n) && std::abs(m) <= window_ && std::abs(n) <= window_;
}

std::size_t ExtendedMomentTable::offset(int m, int n) const {
  if (!contains(m, n))
    throw RangeError("extended index " + idx(m, n) + " outside window " +
                     std::to_string(window_));
  return static_cast<std::size_t>(m + window_) * (2 * window_ + 1) +
         (n + window_);
}

const Complex& ExtendedMomentTable::operator()(int m, int n) const {
  return data_[offset(m, n)];
}

Complex& ExtendedMomentTable::operator()(int m, int n) {
  return data_[offset(m, n)];
}

std::vector<Index2> ExtendedMomentTable::indices() const {
  std::vector<Index2> out;
  for (int m = -window_; m <= window_; ++m)
    for (int n = -window_; n <= window_; ++n)
      if (contains(m, n)) out.push_back({m, n});
  return out;
}

double ExtendedMomentTable::max_abs() const {
  double r = 0.0;
  for (const auto& v : data_) r = std::max(r, std::abs(v));
  return r;
}

std::vector<double> HamburgerTable::to_double() const {
  std::vector<double> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(static_cast<double>(v));
  return out;
}

HamburgerTable HamburgerTable::from_double(const std::vector<double>& values) {
  HamburgerTable t;
  t.s.reserve(values.size());
  for (double v : values) t.s.emplace_back(Real(v, working_digits()));
  return t;
}

HerglotzTable::HerglotzTable(int degree) : degree_(degree) {
  if (degree < 0) throw RangeError("Herglotz degree must be nonnegative");
  data_.assign(static_cast<std::size_t>(2 * degree + 1), Complex{});
}

const Complex& HerglotzTable::operator[](int n) const {
  if (std::abs(n) > degree_)
    throw RangeError("trigonometric moment " + std::to_string(n) +
                     " outside degree " + std::to_string(degree_));
  return data_[static_cast<std::size_t>(n + degree_)];
}

Complex& HerglotzTable::operator[](int n) {
  return const_cast<Complex&>(std::as_const(*this)[n]);
}

bool HerglotzTable::is_hermitian(double tol) const {
  double scale = 1.0;
  for (const auto& v : data_) scale = std::max(scale, std::abs(v));
  for (int n = 0; n <= degree_; ++n)
    if (std::abs((*this)[-n] - std::conj((*this)[n])) > tol * scale) return false;
  return true;
}

RealMomentTable2D::RealMomentTable2D(int degree) : degree_(degree) {
  if (degree < 0) throw RangeError("2-D table degree must be nonnegative");
  const auto size = static_cast<std::size_t>(degree + 1) * (degree + 1);
  data_.assign(size, 0.0);
  known_.assign(size, 0);
}

bool RealMomentTable2D::known(int k, int l) const {
  if (k < 0 || l < 0 || k > degree_ || l > degree_) return false;
  return known_[static_cast<std::size_t>(k) * (degree_ + 1) + l] != 0;
}

double RealMomentTable2D::operator()(int k, int l) const {
  if (!known(k, l))
    throw RangeError("2-D moment " + idx(k, l) + " is not available");
  return data_[static_cast<std::size_t>(k) * (degree_ + 1) + l];
}

void RealMomentTable2D::set(int k, int l, double value) {
  if (k < 0 || l < 0 || k > degree_ || l > degree_)
    throw RangeError("2-D moment " + idx(k, l) + " outside degree " +
                     std::to_string(degree_));
  const auto i = static_cast<std::size_t>(k) * (degree_ + 1) + l;
  data_[i] = value;
  known_[i] = 1;
}

int RealMomentTable2D::total_degree_known() const {
  for (int t = 0; t <= 2 * degree_; ++t)
    for (int k = 0; k <= t; ++k)
      if (!known(k, t - k)) return t - 1;
  return 2 * degree_;
}

}  // namespace cmoment

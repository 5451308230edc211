#pragma once

#include <stdexcept>
#include <string>

namespace cmoment {

enum class ErrorKind {
  domain,
  range,
  convergence,
  invariant,
  precondition,
  numeric,
  rank_deficient,
  parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};
struct RangeError : Error {
  explicit RangeError(const std::string& w) : Error(ErrorKind::range, w) {}
};
struct InvariantError : Error {
  explicit InvariantError(const std::string& w) : Error(ErrorKind::invariant, w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w)
      : Error(ErrorKind::precondition, w) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorKind::parse, w) {}
};

// Adaptive quadrature ran out of subdivisions. Carries the best estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& w, double estimate, double error_estimate)
      : Error(ErrorKind::convergence, w),
        estimate_(estimate),
        error_estimate_(error_estimate) {}
  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

// Hankel data has lower numerical rank than requested: the underlying
// measure has fewer atoms.
class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& w, int rank)
      : Error(ErrorKind::rank_deficient, w), rank_(rank) {}
  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

}  // namespace cmoment

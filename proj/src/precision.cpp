#include "cmoment/precision.hpp"

#include <cmath>

#include "cmoment/error.hpp"

namespace cmoment {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::range: return "range";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::invariant: return "invariant";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::rank_deficient: return "rank-deficient";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

unsigned digits_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * std::log10(2.0)));
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
  if (digits < 10) throw DomainError("precision must be at least 10 digits");
  Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned working_digits() { return Real::default_precision(); }

Real at_working_precision(const Real& x) {
  return Real(x, working_digits());
}

}  // namespace cmoment

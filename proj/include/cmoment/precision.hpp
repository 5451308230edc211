#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace cmoment {

// Variable-precision real used by quadrature and Hankel recovery. The
// precision of newly created values follows the thread default, see
// PrecisionScope.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                          boost::multiprecision::et_off>;

// 128-bit mantissa.
inline constexpr unsigned kDefaultDigits = 39;

unsigned digits_for_bits(unsigned bits);

// Sets the working precision (decimal digits) for Real on this thread and
// restores the previous value on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

unsigned working_digits();

// Value re-rounded to the current working precision.
Real at_working_precision(const Real& x);

}  // namespace cmoment

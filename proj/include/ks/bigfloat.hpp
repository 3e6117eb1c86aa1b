#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "ks/numeric.hpp"

namespace ks {

// Runtime-variable-precision real for the certification mode.
using BigFloat = boost::multiprecision::mpfr_float;

template <>
inline BigFloat pi_value<BigFloat>() {
  BigFloat x;  // picks up the current default precision
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

// Sets the working precision (decimal digits) for BigFloat values constructed
// inside the scope, restoring the previous value on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

}  // namespace ks

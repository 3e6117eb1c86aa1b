#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ks/numeric.hpp"

namespace ks {

// Parameters of one instance: odd coprime p, q >= 3, multipliers k_p, k_q
// coprime to them, and the sign chosen for c (only c^2 is constrained).
struct KSParams {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t kp = 0;
  std::int64_t kq = 0;
  int c_sign = +1;
};

enum class ParamError {
  even_parameter,         // p or q even
  below_minimum,          // p or q < 3
  pq_not_coprime,         // gcd(p, q) != 1
  k_out_of_range,         // k_p not in (0, p) or k_q not in (0, q)
  k_not_coprime,          // gcd(k_p, p) != 1 or gcd(k_q, q) != 1
  nonpositive_c_squared,  // invalid angle choice
};

const char* to_string(ParamError e);

// Stable CLI exit code for each validation error (documented in the README).
int exit_code(ParamError e);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ParamError code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ParamError code() const { return code_; }

 private:
  ParamError code_;
};

// Default multiplier choice for an odd x >= 3: ceil(x/4) when x = 3 (mod 4),
// floor(x/4) when x = 1 (mod 4). Always lands in (0, x) coprime to x.
std::int64_t default_k(std::int64_t x);

// The unique r in (0, pq) with r = 1 (mod p) and r = -1 (mod q), by extended
// Euclid. Consequences: r^2 = 1 (mod pq) and r != 1, pq-1.
std::int64_t crt_r(std::int64_t p, std::int64_t q);

// c^2 = -cos(2*pi*(kp/p - kq/q)) / cos(2*pi*(kp/p + kq/q)).
// The denominator is never zero for odd p, q: it vanishes only when
// 4*(kp*q + kq*p) is an odd multiple of pq, impossible by parity.
template <class Real>
Real c_squared(const KSParams& P) {
  const Turn diff = Turn::of(P.kp * P.q - P.kq * P.p, P.p * P.q);
  const Turn sum = Turn::of(P.kp * P.q + P.kq * P.p, P.p * P.q);
  return -cos_turn<Real>(diff) / cos_turn<Real>(sum);
}

// c = c_sign * sqrt(c^2); caller must have validated c^2 > 0.
template <class Real>
Real compute_c(const KSParams& P) {
  using std::sqrt;
  Real c2 = c_squared<Real>(P);
  return Real(P.c_sign) * sqrt(c2);
}

struct ValidatedParams {
  KSParams params;
  std::int64_t r = 0;
};

// Checks all KSParams invariants (including c^2 > 0) and throws
// ValidationError with a distinct code on the first violation.
ValidatedParams validate_params(const KSParams& P);

}  // namespace ks

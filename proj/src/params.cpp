#include "ks/params.hpp"

#include <numeric>

namespace ks {

const char* to_string(ParamError e) {
  switch (e) {
    case ParamError::even_parameter: return "p and q must be odd";
    case ParamError::below_minimum: return "p and q must be at least 3";
    case ParamError::pq_not_coprime: return "p and q must be coprime";
    case ParamError::k_out_of_range: return "k_p must lie in (0, p) and k_q in (0, q)";
    case ParamError::k_not_coprime: return "k_p must be coprime to p and k_q to q";
    case ParamError::nonpositive_c_squared: return "invalid angle choice: c^2 <= 0";
  }
  return "unknown parameter error";
}

int exit_code(ParamError e) {
  switch (e) {
    case ParamError::even_parameter: return 10;
    case ParamError::below_minimum: return 11;
    case ParamError::pq_not_coprime: return 12;
    case ParamError::k_out_of_range: return 13;
    case ParamError::k_not_coprime: return 14;
    case ParamError::nonpositive_c_squared: return 15;
  }
  return 1;
}

std::int64_t default_k(std::int64_t x) {
  if (x < 3 || x % 2 == 0)
    throw std::invalid_argument("default_k: argument must be odd and >= 3");
  return (x % 4 == 3) ? (x + 3) / 4 : x / 4;
}

namespace {

// Bezout coefficients: g = gcd(a, b) = ax + by.
struct Egcd {
  std::int64_t g, x, y;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  Egcd e = egcd(b, a % b);
  return {e.g, e.y, e.x - (a / b) * e.y};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  Egcd e = egcd(((a % m) + m) % m, m);
  if (e.g != 1) throw std::invalid_argument("mod_inverse: not coprime");
  return ((e.x % m) + m) % m;
}

}  // namespace

std::int64_t crt_r(std::int64_t p, std::int64_t q) {
  if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0)
    throw std::invalid_argument("crt_r: p and q must be odd and >= 3");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("crt_r: p and q must be coprime");
  // r = 1 + p*t with p*t = -2 (mod q)
  const std::int64_t pq = p * q;
  const std::int64_t t = ((q - 2) % q) * mod_inverse(p, q) % q;
  std::int64_t r = (1 + p * t) % pq;
  if (r <= 0) r += pq;
  return r;
}

ValidatedParams validate_params(const KSParams& P) {
  if (P.p % 2 == 0 || P.q % 2 == 0)
    throw ValidationError(ParamError::even_parameter, to_string(ParamError::even_parameter));
  if (P.p < 3 || P.q < 3)
    throw ValidationError(ParamError::below_minimum, to_string(ParamError::below_minimum));
  if (std::gcd(P.p, P.q) != 1)
    throw ValidationError(ParamError::pq_not_coprime, to_string(ParamError::pq_not_coprime));
  if (P.kp <= 0 || P.kp >= P.p || P.kq <= 0 || P.kq >= P.q)
    throw ValidationError(ParamError::k_out_of_range, to_string(ParamError::k_out_of_range));
  if (std::gcd(P.kp, P.p) != 1 || std::gcd(P.kq, P.q) != 1)
    throw ValidationError(ParamError::k_not_coprime, to_string(ParamError::k_not_coprime));
  if (P.c_sign != 1 && P.c_sign != -1)
    throw std::invalid_argument("c_sign must be +1 or -1");
  if (!(c_squared<double>(P) > 0.0))
    throw ValidationError(ParamError::nonpositive_c_squared,
                          to_string(ParamError::nonpositive_c_squared));
  return ValidatedParams{P, crt_r(P.p, P.q)};
}

}  // namespace ks

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ks {

// Angle carried as an exact fraction of a full turn: the value is 2*pi*num/den.
// Always stored reduced with den > 0 and 0 <= num < den, so angle identities
// (periodicity, sums of rotation angles) can be tested as integer equalities.
struct Turn {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // 2*pi*s/m, reduced mod one turn. m > 0 required; s may be any integer.
  static Turn of(std::int64_t s, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("Turn: modulus must be positive");
    s %= m;
    if (s < 0) s += m;
    const std::int64_t g = std::gcd(s, m);  // gcd(0, m) == m
    return Turn{s / g, m / g};
  }

  friend Turn operator+(Turn a, Turn b) {
    const std::int64_t g = std::gcd(a.den, b.den);
    const std::int64_t l = a.den / g * b.den;
    return of(a.num * (l / a.den) + b.num * (l / b.den), l);
  }
  friend Turn operator-(Turn a, Turn b) {
    const std::int64_t g = std::gcd(a.den, b.den);
    const std::int64_t l = a.den / g * b.den;
    return of(a.num * (l / a.den) - b.num * (l / b.den), l);
  }
  bool operator==(const Turn&) const = default;
};

template <class Real>
Real pi_value();

template <>
inline double pi_value<double>() {
  return std::numbers::pi;
}

namespace detail {

// Snap t to its nearest quarter turn in integer arithmetic and return the
// quadrant index together with the (small) leftover angle in radians.
// Multiples of a quarter turn evaluate exactly through the quad==0 path.
template <class Real>
struct QuadrantReduced {
  int quadrant;  // 0..3
  bool exact;    // t is an exact multiple of a quarter turn
  Real rest;     // leftover angle, |rest| <= pi/4
};

template <class Real>
QuadrantReduced<Real> reduce_quadrant(Turn t) {
  // k = round(4*num/den), ties toward +inf; num in [0, den) so k in [0, 4]
  const std::int64_t k = (8 * t.num + t.den) / (2 * t.den);
  const std::int64_t rem = 4 * t.num - k * t.den;  // |rem| <= den/2
  QuadrantReduced<Real> out;
  out.quadrant = static_cast<int>(k % 4);
  out.exact = (rem == 0);
  if (out.exact) {
    out.rest = Real(0);
  } else {
    out.rest = pi_value<Real>() * Real(rem) / (Real(2) * Real(t.den));
  }
  return out;
}

}  // namespace detail

// cos(2*pi*num/den) and sin(2*pi*num/den).
template <class Real>
Real cos_turn(Turn t) {
  const auto r = detail::reduce_quadrant<Real>(t);
  if (r.exact) {
    constexpr int table[4] = {1, 0, -1, 0};
    return Real(table[r.quadrant]);
  }
  using std::cos;
  using std::sin;
  switch (r.quadrant) {
    case 0: return cos(r.rest);
    case 1: return -sin(r.rest);
    case 2: return -cos(r.rest);
    default: return sin(r.rest);
  }
}

template <class Real>
Real sin_turn(Turn t) {
  const auto r = detail::reduce_quadrant<Real>(t);
  if (r.exact) {
    constexpr int table[4] = {0, 1, 0, -1};
    return Real(table[r.quadrant]);
  }
  using std::cos;
  using std::sin;
  switch (r.quadrant) {
    case 0: return sin(r.rest);
    case 1: return cos(r.rest);
    case 2: return -sin(r.rest);
    default: return -cos(r.rest);
  }
}

}  // namespace ks

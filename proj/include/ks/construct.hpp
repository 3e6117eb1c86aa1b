#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ks/linalg.hpp"
#include "ks/params.hpp"

namespace ks {

struct PrecisionInfo {
  enum class Mode { double_precision, extended };
  Mode mode = Mode::double_precision;
  unsigned digits = 17;  // decimal significant digits carried by this instance
};

// The realized construction. Index layout is fixed:
//   vectors[i]        = M^i a   for 0 <= i < pq
//   vectors[pq + i]   = M^i b   for 0 <= i < pq
//   bases[i]          = { M^i a, M^(i-1) a, M^i b, M^(i-r) b }, exponents mod pq
template <class Real>
struct KSInstance {
  KSParams params;
  std::int64_t r = 0;
  Real c{};
  std::vector<Vec4<Real>> vectors;
  std::vector<std::array<std::int32_t, 4>> bases;
  PrecisionInfo precision;

  std::int64_t pq() const { return params.p * params.q; }
};

// Planar rotation by 2*pi*s/m. Orthogonal with determinant 1; exact at
// quarter-turn angles thanks to the Turn reduction.
template <class Real>
Mat2<Real> rotation(std::int64_t m, std::int64_t s) {
  if (m <= 0) throw std::invalid_argument("rotation: modulus must be positive");
  const Turn t = Turn::of(s, m);
  const Real co = cos_turn<Real>(t);
  const Real si = sin_turn<Real>(t);
  return Mat2<Real>{{co, -si, si, co}};
}

// The vectors a and b:
//   a = (1-c, 0)' (x) R_q (1, 0)'  +  (0, 1+c)' (x) R_q (0, 1)'
//     = ((1-c) cos t, (1-c) sin t, -(1+c) sin t, (1+c) cos t),  t = 2*pi*kq/q
//   b = (c+1, 0, 0, c-1)
template <class Real>
std::pair<Vec4<Real>, Vec4<Real>> base_vectors(const KSParams& P, const Real& c) {
  const Turn t = Turn::of(P.kq, P.q);
  const Real co = cos_turn<Real>(t);
  const Real si = sin_turn<Real>(t);
  const Real one(1);
  Vec4<Real> a{{(one - c) * co, (one - c) * si, -(one + c) * si, (one + c) * co}};
  Vec4<Real> b{{c + one, Real(0), Real(0), c - one}};
  return {a, b};
}

// M^i evaluated from exact reduced angles: M^i = R_{p, i*kp} (x) R_{q, i*kq}.
// No power accumulation error; M^(pq) is the identity exactly.
template <class Real>
Mat4<Real> power_of_m(const KSParams& P, std::int64_t i) {
  return kron(rotation<Real>(P.p, i * P.kp), rotation<Real>(P.q, i * P.kq));
}

// Builds the full instance for an externally supplied c (used by the
// perturbed-c negative control). Parameters are still validated.
template <class Real>
KSInstance<Real> build_instance_with_c(const KSParams& P, const Real& c,
                                       PrecisionInfo precision = {}) {
  const ValidatedParams vp = validate_params(P);
  const std::int64_t n = P.p * P.q;

  KSInstance<Real> inst;
  inst.params = P;
  inst.r = vp.r;
  inst.c = c;
  inst.precision = precision;
  inst.vectors.resize(static_cast<std::size_t>(2 * n));
  inst.bases.resize(static_cast<std::size_t>(n));

  const auto [a, b] = base_vectors<Real>(P, c);
  for (std::int64_t i = 0; i < n; ++i) {
    const Mat4<Real> mi = power_of_m<Real>(P, i);
    inst.vectors[static_cast<std::size_t>(i)] = mi * a;
    inst.vectors[static_cast<std::size_t>(n + i)] = mi * b;
  }
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = [n](std::int64_t e) {
      return static_cast<std::int32_t>(((e % n) + n) % n);
    };
    inst.bases[static_cast<std::size_t>(i)] = {
        idx(i), idx(i - 1), static_cast<std::int32_t>(n + idx(i)),
        static_cast<std::int32_t>(n + idx(i - vp.r))};
  }
  return inst;
}

template <class Real>
KSInstance<Real> build_instance(const KSParams& P, PrecisionInfo precision = {}) {
  validate_params(P);
  return build_instance_with_c<Real>(P, compute_c<Real>(P), precision);
}

// Export-time option: rescale every vector to unit norm. Construction keeps
// the raw vectors; verification is scale-free either way.
template <class Real>
KSInstance<Real> unit_normalized(KSInstance<Real> inst) {
  using std::sqrt;
  for (auto& v : inst.vectors) {
    const Real n = sqrt(norm_sq(v));
    for (std::size_t i = 0; i < 4; ++i) v[i] = v[i] / n;
  }
  return inst;
}

}  // namespace ks

#pragma once

#include <array>
#include <cstddef>

namespace ks {

// Small fixed-size real linear algebra, templated on the scalar so the same
// code runs in double and in extended precision. Row-major storage.

template <class Real>
struct Vec4 {
  std::array<Real, 4> c{};

  Real& operator[](std::size_t i) { return c[i]; }
  const Real& operator[](std::size_t i) const { return c[i]; }
};

template <class Real>
struct Mat2 {
  std::array<Real, 4> e{};  // e[2*r + c]

  Real& at(std::size_t r, std::size_t c) { return e[2 * r + c]; }
  const Real& at(std::size_t r, std::size_t c) const { return e[2 * r + c]; }

  static Mat2 identity() { return Mat2{{Real(1), Real(0), Real(0), Real(1)}}; }
};

template <class Real>
struct Mat4 {
  std::array<Real, 16> e{};  // e[4*r + c]

  Real& at(std::size_t r, std::size_t c) { return e[4 * r + c]; }
  const Real& at(std::size_t r, std::size_t c) const { return e[4 * r + c]; }

  static Mat4 identity() {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m.at(i, i) = Real(1);
    return m;
  }
};

template <class Real>
Mat2<Real> operator*(const Mat2<Real>& a, const Mat2<Real>& b) {
  Mat2<Real> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return r;
}

template <class Real>
Mat4<Real> operator*(const Mat4<Real>& a, const Mat4<Real>& b) {
  Mat4<Real> r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Real s(0);
      for (std::size_t k = 0; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

template <class Real>
Vec4<Real> operator*(const Mat4<Real>& m, const Vec4<Real>& v) {
  Vec4<Real> r;
  for (std::size_t i = 0; i < 4; ++i) {
    Real s(0);
    for (std::size_t k = 0; k < 4; ++k) s += m.at(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

template <class Real>
Mat4<Real> transpose(const Mat4<Real>& m) {
  Mat4<Real> r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r.at(i, j) = m.at(j, i);
  return r;
}

// Kronecker product of two 2x2 blocks; satisfies (A@B)(C@D) = AC @ BD.
template <class Real>
Mat4<Real> kron(const Mat2<Real>& a, const Mat2<Real>& b) {
  Mat4<Real> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          r.at(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
  return r;
}

template <class Real>
Real dot(const Vec4<Real>& u, const Vec4<Real>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

template <class Real>
Real norm_sq(const Vec4<Real>& v) {
  return dot(v, v);
}

template <class Real>
Real max_abs_diff(const Mat4<Real>& a, const Mat4<Real>& b) {
  using std::abs;
  Real m(0);
  for (std::size_t i = 0; i < 16; ++i) {
    Real d = abs(a.e[i] - b.e[i]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace ks

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "ks/bigfloat.hpp"
#include "ks/construct.hpp"

using ks::KSParams;
using ks::Mat2;
using ks::Mat4;
using ks::Vec4;

namespace {

Mat4<double> identity_residual(const Mat4<double>& m) {
  Mat4<double> d = ks::transpose(m) * m;
  for (std::size_t i = 0; i < 4; ++i) d.at(i, i) -= 1.0;
  return d;
}

double max_abs(const Mat4<double>& m) {
  double v = 0.0;
  for (const double x : m.e) v = std::max(v, std::abs(x));
  return v;
}

double det2(const Mat2<double>& m) {
  return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

}  // namespace

TEST_CASE("rotation at zero angle is exactly the identity") {
  for (const std::int64_t m : {1, 2, 3, 5, 97}) {
    const auto r = ks::rotation<double>(m, 0);
    CHECK(r.e == Mat2<double>::identity().e);
  }
  CHECK_THROWS_AS(ks::rotation<double>(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ks::rotation<double>(-3, 1), std::invalid_argument);
}

TEST_CASE("rotation quarter turn is exact") {
  const auto z = ks::rotation<double>(4, 1);
  CHECK(z.at(0, 0) == 0.0);
  CHECK(z.at(0, 1) == -1.0);
  CHECK(z.at(1, 0) == 1.0);
  CHECK(z.at(1, 1) == 0.0);
}

TEST_CASE("rotation by a third of a turn") {
  const auto r = ks::rotation<double>(3, 1);
  const double s3 = std::sqrt(3.0) / 2.0;
  CHECK(r.at(0, 0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(r.at(0, 1) == doctest::Approx(-s3).epsilon(1e-15));
  CHECK(r.at(1, 0) == doctest::Approx(s3).epsilon(1e-15));
  CHECK(r.at(1, 1) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("rotations are orthogonal with determinant 1") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<std::int64_t> mod(1, 400);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t m = mod(rng);
    const std::int64_t s = std::uniform_int_distribution<std::int64_t>(0, 3 * m)(rng);
    const auto r = ks::rotation<double>(m, s);
    const auto gtg = Mat2<double>{{r.at(0, 0) * r.at(0, 0) + r.at(1, 0) * r.at(1, 0),
                                   r.at(0, 0) * r.at(0, 1) + r.at(1, 0) * r.at(1, 1),
                                   r.at(0, 1) * r.at(0, 0) + r.at(1, 1) * r.at(1, 0),
                                   r.at(0, 1) * r.at(0, 1) + r.at(1, 1) * r.at(1, 1)}};
    CHECK(gtg.at(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gtg.at(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(gtg.at(0, 1)) < 1e-14);
    CHECK(det2(r) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("rotation angles add exactly at the Turn level") {
  // R_{m,s} R_{m,t} = R_{m,s+t}: compare against the directly constructed sum
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
    const std::int64_t s = std::uniform_int_distribution<std::int64_t>(0, 2 * m)(rng);
    const std::int64_t t = std::uniform_int_distribution<std::int64_t>(0, 2 * m)(rng);
    const auto prod = ks::rotation<double>(m, s) * ks::rotation<double>(m, t);
    const auto direct = ks::rotation<double>(m, s + t);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(prod.e[i] == doctest::Approx(direct.e[i]).epsilon(1e-13));
  }
}

TEST_CASE("kron of identities is the 4x4 identity") {
  const auto i4 = ks::kron(Mat2<double>::identity(), Mat2<double>::identity());
  CHECK(i4.e == Mat4<double>::identity().e);
}

TEST_CASE("kron quarter-turn square equals half turn") {
  const auto zi = ks::kron(ks::rotation<double>(4, 1), Mat2<double>::identity());
  const auto half = ks::kron(ks::rotation<double>(4, 2), Mat2<double>::identity());
  CHECK(ks::max_abs_diff(zi * zi, half) == 0.0);
  // R_{4,2} is exactly -I
  const auto m = ks::rotation<double>(4, 2);
  CHECK(m.at(0, 0) == -1.0);
  CHECK(m.at(0, 1) == 0.0);
  CHECK(m.at(1, 0) == 0.0);
  CHECK(m.at(1, 1) == -1.0);
}

TEST_CASE("kron satisfies the mixed-product rule against direct multiplication") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int64_t> mod(1, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = ks::rotation<double>(mod(rng), mod(rng));
    const auto b = ks::rotation<double>(mod(rng), mod(rng));
    const auto c = ks::rotation<double>(mod(rng), mod(rng));
    const auto d = ks::rotation<double>(mod(rng), mod(rng));
    const Mat4<double> lhs = ks::kron(a, b) * ks::kron(c, d);
    const Mat4<double> rhs = ks::kron(a * c, b * d);
    CHECK(ks::max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("base vectors satisfy their structural identities") {
  for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {3, 5}, {3, 7}, {5, 7}, {7, 9}}) {
    const KSParams P{p, q, ks::default_k(p), ks::default_k(q), +1};
    const double c = ks::compute_c<double>(P);
    const auto [a, b] = ks::base_vectors<double>(P, c);
    CHECK(b[1] == 0.0);
    CHECK(b[2] == 0.0);
    CHECK(b[0] == c + 1.0);
    CHECK(b[3] == c - 1.0);

    // a = (1-c, 0)' (x) R_q (1, 0)'  +  (0, 1+c)' (x) R_q (0, 1)'
    const auto rq = ks::rotation<double>(q, ks::default_k(q));
    const Vec4<double> decomposed{{(1.0 - c) * rq.at(0, 0), (1.0 - c) * rq.at(1, 0),
                                   (1.0 + c) * rq.at(0, 1), (1.0 + c) * rq.at(1, 1)}};
    for (std::size_t i = 0; i < 4; ++i) CHECK(a[i] == decomposed[i]);
  }
}

TEST_CASE("base vectors for (3,5,1,1) match the high-precision oracle") {
  const KSParams P{3, 5, 1, 1, +1};
  const double c = ks::compute_c<double>(P);
  const auto [a, b] = ks::base_vectors<double>(P, c);
  CHECK(b[0] == doctest::Approx(1.8270909152852018).epsilon(1e-14));
  CHECK(b[3] == doctest::Approx(-0.1729090847147982).epsilon(1e-13));
  CHECK(a[0] == doctest::Approx(0.0534318456586901).epsilon(1e-12));
  CHECK(a[1] == doctest::Approx(0.1644463117446396).epsilon(1e-12));
  CHECK(a[2] == doctest::Approx(-1.7376667208456676).epsilon(1e-13));
  CHECK(a[3] == doctest::Approx(0.5646021430912047).epsilon(1e-13));
}

TEST_CASE("build_instance counts and basis layout for (3,5,1,1)") {
  const auto inst = ks::build_instance<double>(KSParams{3, 5, 1, 1, +1});
  CHECK(inst.vectors.size() == 30);
  CHECK(inst.bases.size() == 15);
  CHECK(inst.r == 4);

  // B_0 = {a_0, a_{pq-1}, b_0, b_{pq-r}}
  CHECK(inst.bases[0] == std::array<std::int32_t, 4>{0, 14, 15, 26});

  std::vector<int> mult(30, 0);
  for (const auto& b : inst.bases)
    for (const auto v : b) ++mult[static_cast<std::size_t>(v)];
  for (const int m : mult) CHECK(m == 2);
}

TEST_CASE("basis quadruples agree with the membership derivation") {
  // each a_i joins B_i and B_{i+1}; each b_i joins B_i and B_{i+r}
  for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {3, 5}, {3, 7}, {5, 7}}) {
    const auto inst =
        ks::build_instance<double>(KSParams{p, q, ks::default_k(p), ks::default_k(q), +1});
    const std::int64_t n = inst.pq();
    std::vector<std::set<std::int32_t>> from_membership(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      from_membership[static_cast<std::size_t>(i)].insert(static_cast<std::int32_t>(i));
      from_membership[static_cast<std::size_t>((i + 1) % n)].insert(
          static_cast<std::int32_t>(i));
      from_membership[static_cast<std::size_t>(i)].insert(static_cast<std::int32_t>(n + i));
      from_membership[static_cast<std::size_t>((i + inst.r) % n)].insert(
          static_cast<std::int32_t>(n + i));
    }
    for (std::int64_t i = 0; i < n; ++i) {
      const auto& quad = inst.bases[static_cast<std::size_t>(i)];
      const std::set<std::int32_t> from_def(quad.begin(), quad.end());
      CHECK(from_def == from_membership[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("iterated multiplication returns to the identity within 1e-9") {
  for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {3, 5}, {3, 7}, {5, 7}, {5, 9}}) {
    const KSParams P{p, q, ks::default_k(p), ks::default_k(q), +1};
    const Mat4<double> m = ks::power_of_m<double>(P, 1);
    Mat4<double> acc = Mat4<double>::identity();
    for (std::int64_t i = 0; i < p * q; ++i) acc = m * acc;
    CHECK(ks::max_abs_diff(acc, Mat4<double>::identity()) < 1e-9);
  }
}

TEST_CASE("exact-angle powers are orthogonal and match iterated multiplication") {
  const KSParams P{5, 7, 1, 2, +1};
  const double c = ks::compute_c<double>(P);
  const auto [a, b] = ks::base_vectors<double>(P, c);
  const Mat4<double> m = ks::power_of_m<double>(P, 1);

  Vec4<double> va = a;
  Vec4<double> vb = b;
  for (std::int64_t i = 0; i < 35; ++i) {
    const Mat4<double> mi = ks::power_of_m<double>(P, i);
    CHECK(max_abs(identity_residual(mi)) < 1e-9);

    const Vec4<double> ea = mi * a;
    const Vec4<double> eb = mi * b;
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(ea[j] - va[j]) < 1e-11);
      CHECK(std::abs(eb[j] - vb[j]) < 1e-11);
    }
    va = m * va;
    vb = m * vb;
  }
}

TEST_CASE("M^(pq) is exactly the identity in extended precision") {
  ks::PrecisionScope scope(60);
  const KSParams P{3, 5, 1, 1, +1};
  const auto mpq = ks::power_of_m<ks::BigFloat>(P, 15);
  CHECK(mpq.e == Mat4<ks::BigFloat>::identity().e);
}

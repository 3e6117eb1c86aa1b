#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "ks/bigfloat.hpp"
#include "ks/certificate.hpp"
#include "ks/verify.hpp"

using ks::BasisList;
using ks::InputError;
using ks::InputErrorKind;
using ks::KSParams;

namespace {

constexpr double kTol = 1e-9;

std::vector<std::vector<double>> standard_basis4() {
  return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

InputErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.kind();
  }
  throw std::logic_error("expected InputError");
}

}  // namespace

TEST_CASE("paper instance (3,5,1,1) verifies as a parity pair") {
  const auto inst = ks::build_instance<double>(KSParams{3, 5, 1, 1, +1});
  const auto rep = ks::verify_instance<double>(inst, kTol);
  CHECK(rep.basis_count == 15);
  CHECK(rep.basis_count_odd);
  CHECK(rep.max_orthogonality_residual <= kTol);
  CHECK(rep.orthogonality_pass);
  CHECK(rep.all_multiplicities_even);
  CHECK(rep.min_multiplicity == 2);
  for (const int m : rep.multiplicities) CHECK(m == 2);
  CHECK(rep.verdict);
}

TEST_CASE("single standard basis fails only the multiplicity clause") {
  const BasisList bases{{0, 1, 2, 3}};
  const auto rep = ks::verify_ks_pair<double>(standard_basis4(), bases, kTol);
  CHECK(rep.basis_count == 1);
  CHECK(rep.basis_count_odd);       // k = 1 is odd
  CHECK(rep.orthogonality_pass);    // exactly orthogonal
  CHECK_FALSE(rep.all_multiplicities_even);  // every multiplicity is 1
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("deleting one basis breaks both parity clauses") {
  const auto inst = ks::build_instance<double>(KSParams{3, 5, 1, 1, +1});
  auto bases = ks::to_basis_lists(inst.bases);
  bases.pop_back();
  const auto rep = ks::verify_ks_pair<double>(ks::to_vector_lists(inst), bases, kTol);
  CHECK(rep.basis_count == 14);
  CHECK_FALSE(rep.basis_count_odd);
  CHECK(rep.orthogonality_pass);
  CHECK_FALSE(rep.all_multiplicities_even);
  // the four members of the removed basis drop to multiplicity 1
  int odd_count = 0;
  for (const int m : rep.multiplicities)
    if (m % 2 == 1) ++odd_count;
  CHECK(odd_count == 4);
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("duplicate bases are multiset members") {
  const auto inst = ks::build_instance<double>(KSParams{3, 5, 1, 1, +1});
  auto bases = ks::to_basis_lists(inst.bases);
  bases.push_back(bases.front());  // 16 bases now
  const auto rep = ks::verify_ks_pair<double>(ks::to_vector_lists(inst), bases, kTol);
  CHECK(rep.basis_count == 16);
  CHECK_FALSE(rep.basis_count_odd);
  CHECK_FALSE(rep.all_multiplicities_even);  // duplicated members now have 3
  CHECK(rep.multiplicity_histogram().at(3) == 4);
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("vector outside every basis blocks the verdict") {
  auto vectors = standard_basis4();
  vectors.push_back({1, 1, 0, 0});
  const BasisList bases{{0, 1, 2, 3}, {0, 1, 2, 3}};
  const auto rep = ks::verify_ks_pair<double>(vectors, bases, kTol);
  CHECK(rep.all_multiplicities_even);  // 2,2,2,2,0
  CHECK(rep.min_multiplicity == 0);
  CHECK_FALSE(rep.multiplicities_pass);
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("malformed verification input is a hard error") {
  const auto vectors = standard_basis4();
  CHECK(error_kind([&] {
          ks::verify_ks_pair<double>(vectors, {{0, 1, 2, 7}}, kTol);
        }) == InputErrorKind::index_out_of_range);
  CHECK(error_kind([&] {
          ks::verify_ks_pair<double>(vectors, {{0, 1, 2, 2}}, kTol);
        }) == InputErrorKind::duplicate_index);
  CHECK(error_kind([&] {
          ks::verify_ks_pair<double>(vectors, {{0, 1, 2}}, kTol);
        }) == InputErrorKind::bad_basis_size);
  CHECK(error_kind([&] {
          auto v = vectors;
          v[2] = {0, 0, 0, 0};
          ks::verify_ks_pair<double>(v, {{0, 1, 2, 3}}, kTol);
        }) == InputErrorKind::zero_vector);
  CHECK(error_kind([&] {
          ks::verify_ks_pair<double>(vectors, {{0, 1, 2, 3}}, 0.0);
        }) == InputErrorKind::bad_tolerance);
}

TEST_CASE("verdict is invariant under global scaling") {
  const auto inst = ks::build_instance<double>(KSParams{3, 5, 1, 1, +1});
  const auto vectors = ks::to_vector_lists(inst);
  const auto bases = ks::to_basis_lists(inst.bases);
  const auto rep = ks::verify_ks_pair<double>(vectors, bases, kTol);

  for (const double scale : {4.0, -2.0, 3.7, 1e-6}) {
    auto scaled = vectors;
    for (auto& v : scaled)
      for (auto& x : v) x *= scale;
    const auto rep2 = ks::verify_ks_pair<double>(scaled, bases, kTol);
    CHECK(rep2.verdict == rep.verdict);
    CHECK(static_cast<double>(rep2.max_orthogonality_residual) ==
          doctest::Approx(static_cast<double>(rep.max_orthogonality_residual))
              .epsilon(1e-10));
  }
  // powers of two rescale losslessly
  auto scaled = vectors;
  for (auto& v : scaled)
    for (auto& x : v) x *= 4.0;
  const auto rep2 = ks::verify_ks_pair<double>(scaled, bases, kTol);
  CHECK(rep2.max_orthogonality_residual == rep.max_orthogonality_residual);
}

TEST_CASE("pairwise independence holds for paper instances") {
  for (const KSParams P : {KSParams{3, 5, 1, 1, +1}, KSParams{3, 7, 1, 2, +1}}) {
    const auto inst = ks::build_instance<double>(P);
    const auto rep =
        ks::check_pairwise_independence<double>(ks::to_vector_lists(inst), kTol);
    CHECK(rep.pass);
    CHECK(rep.min_gram > kTol);
  }
}

TEST_CASE("collinear pair fails independence with gram value 0") {
  std::vector<std::vector<double>> vectors{{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 0, 0}};
  const auto rep = ks::check_pairwise_independence<double>(vectors, kTol);
  CHECK_FALSE(rep.pass);
  CHECK(std::abs(static_cast<double>(rep.min_gram)) < 1e-14);

  vectors[1] = {0, 0, 0, 0};
  CHECK(error_kind([&] { ks::check_pairwise_independence<double>(vectors, kTol); }) ==
        InputErrorKind::zero_vector);
}

TEST_CASE("the six B0 inner products vanish and respond to c as proved") {
  const KSParams P{3, 5, 1, 1, +1};
  const double c = ks::compute_c<double>(P);

  const auto clean = ks::b0_orthogonality_residuals<double>(P, c);
  for (const double r : clean) CHECK(r <= 1e-9);

  // (ii) and (iii) are the only equalities that depend on c^2
  const auto broken = ks::b0_orthogonality_residuals<double>(P, c + 1e-3);
  const double intact_max =
      std::max({broken[0], broken[3], broken[4], broken[5]});
  const double broken_min = std::min(broken[1], broken[2]);
  CHECK(intact_max <= 1e-9);
  CHECK(broken_min >= 1e-6);
  CHECK(broken_min >= 1e3 * std::max(intact_max, 1e-300));
}

TEST_CASE("perturbed-c negative control") {
  const KSParams P{3, 5, 1, 1, +1};
  CHECK(ks::negative_control_perturbed_c<double>(P, 1e-3, kTol));
  CHECK_FALSE(ks::negative_control_perturbed_c<double>(P, 0.0, kTol));
}

TEST_CASE("a'(Rp^m (x) Rq^n)b vanishes whenever m = 0 or n = 1, for any c") {
  for (const auto& [p, q] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 5}, {5, 7}, {3, 11}}) {
    const KSParams P{p, q, ks::default_k(p), ks::default_k(q), +1};
    // deliberately includes a perturbed c: these identities do not depend on it
    for (const double c : {ks::compute_c<double>(P), ks::compute_c<double>(P) + 0.25}) {
      const auto [a, b] = ks::base_vectors<double>(P, c);
      const double scale =
          std::sqrt(ks::norm_sq(a)) * std::sqrt(ks::norm_sq(b));
      for (std::int64_t e = -6; e <= 6; ++e) {
        const auto m0 = ks::kron(ks::rotation<double>(p, 0),
                                 ks::rotation<double>(q, e * P.kq));
        CHECK(std::abs(ks::dot(a, m0 * b)) / scale < 1e-12);
        const auto n1 = ks::kron(ks::rotation<double>(p, e * P.kp),
                                 ks::rotation<double>(q, P.kq));
        CHECK(std::abs(ks::dot(a, n1 * b)) / scale < 1e-12);
      }
    }
  }
}

TEST_CASE("extended-precision verification reaches 1e-40") {
  ks::PrecisionScope scope(60);
  const auto inst = ks::build_instance<ks::BigFloat>(KSParams{3, 5, 1, 1, +1});
  const auto rep = ks::verify_instance<ks::BigFloat>(inst, ks::BigFloat("1e-40"));
  CHECK(rep.verdict);
  CHECK(rep.max_orthogonality_residual <= ks::BigFloat("1e-40"));
}

TEST_CASE("every family instance with pq <= 165 verifies at 1e-40 in extended mode") {
  ks::PrecisionScope scope(60);
  const ks::BigFloat tol("1e-40");
  for (std::int64_t p = 3; p * (p + 2) <= 165; p += 2)
    for (std::int64_t q = p + 2; p * q <= 165; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const KSParams P{p, q, ks::default_k(p), ks::default_k(q), +1};
      const auto inst = ks::build_instance<ks::BigFloat>(P);
      const auto rep = ks::verify_instance<ks::BigFloat>(inst, tol);
      CHECK(rep.verdict);
    }
}

TEST_CASE("the negative c sign also yields a verified pair") {
  const auto inst = ks::build_instance<double>(KSParams{3, 5, 1, 1, -1});
  CHECK(inst.c < 0.0);
  CHECK(ks::verify_instance<double>(inst, kTol).verdict);
  const auto indep =
      ks::check_pairwise_independence<double>(ks::to_vector_lists(inst), kTol);
  CHECK(indep.pass);
}

TEST_CASE("parity certificate renders, parses, and refuses failing reports") {
  const auto inst = ks::build_instance<double>(KSParams{3, 5, 1, 1, +1});
  const auto rep = ks::verify_instance<double>(inst, kTol);
  const auto cert = ks::make_parity_certificate(rep);
  CHECK(cert.basis_count == 15);
  CHECK(cert.multiplicity_histogram == std::map<int, int>{{2, 30}});

  const std::string text = cert.to_text();
  CHECK(ks::ParityCertificate::parse(text) == cert);
  CHECK(ks::ParityCertificate::parse(text).to_text() == text);

  auto bases = ks::to_basis_lists(inst.bases);
  bases.pop_back();
  const auto failing = ks::verify_ks_pair<double>(ks::to_vector_lists(inst), bases, kTol);
  CHECK_THROWS_AS(ks::make_parity_certificate(failing), std::invalid_argument);
}

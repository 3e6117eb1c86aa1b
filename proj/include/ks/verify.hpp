#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ks/construct.hpp"
#include "ks/linalg.hpp"

namespace ks {

// Malformed input is a hard error, not a failed verdict: it indicates a broken
// file or caller bug rather than a falsified property.
enum class InputErrorKind {
  index_out_of_range,
  zero_vector,
  duplicate_index,
  bad_basis_size,
  dimension_mismatch,
  bad_tolerance,
};

class InputError : public std::runtime_error {
 public:
  InputError(InputErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  InputErrorKind kind() const { return kind_; }

 private:
  InputErrorKind kind_;
};

// Per-clause verdicts for the parity-pair properties. Orthogonality uses the
// scale-free residual |u.v| / (|u||v|); multiplicities must be even AND >= 2.
template <class Real>
struct VerificationReport {
  std::size_t basis_count = 0;
  bool basis_count_odd = false;
  Real max_orthogonality_residual{};
  bool orthogonality_pass = false;
  std::vector<int> multiplicities;  // per vector index
  bool all_multiplicities_even = false;
  int min_multiplicity = 0;
  bool multiplicities_pass = false;  // even and >= 2
  Real tolerance{};
  bool verdict = false;

  std::map<int, int> multiplicity_histogram() const {
    std::map<int, int> h;
    for (int m : multiplicities) ++h[m];
    return h;
  }
};

template <class Real>
struct IndependenceReport {
  Real min_gram{};  // min over pairs of 1 - (u.v)^2 / (|u|^2 |v|^2)
  bool pass = false;
  Real tolerance{};
};

using BasisList = std::vector<std::vector<std::int32_t>>;

namespace detail {

template <class Real>
void check_vectors_well_formed(const std::vector<std::vector<Real>>& vectors) {
  if (vectors.empty()) return;
  const std::size_t dim = vectors.front().size();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim)
      throw InputError(InputErrorKind::dimension_mismatch,
                       "vector " + std::to_string(i) + " has mismatched dimension");
    Real n2(0);
    for (const Real& x : vectors[i]) n2 += x * x;
    if (n2 == Real(0))
      throw InputError(InputErrorKind::zero_vector,
                       "vector " + std::to_string(i) + " is zero");
  }
}

template <class Real>
Real dot_n(const std::vector<Real>& u, const std::vector<Real>& v) {
  Real s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace detail

// Checks the three clauses on an arbitrary vector/basis family: each basis
// must consist of dim-many distinct, pairwise-orthogonal (at `tolerance`,
// relative) nonzero vectors; the number of bases must be odd; every vector
// must appear an even, positive number of times. Bases are a multiset: a
// repeated basis counts each time it is listed.
template <class Real>
VerificationReport<Real> verify_ks_pair(const std::vector<std::vector<Real>>& vectors,
                                        const BasisList& bases, const Real& tolerance) {
  using std::abs;
  using std::sqrt;
  if (!(tolerance > Real(0)))
    throw InputError(InputErrorKind::bad_tolerance, "tolerance must be positive");
  detail::check_vectors_well_formed(vectors);
  const std::size_t dim = vectors.empty() ? 0 : vectors.front().size();

  VerificationReport<Real> rep;
  rep.tolerance = tolerance;
  rep.basis_count = bases.size();
  rep.basis_count_odd = (bases.size() % 2 == 1);
  rep.multiplicities.assign(vectors.size(), 0);
  rep.max_orthogonality_residual = Real(0);

  std::vector<Real> norms(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    norms[i] = sqrt(detail::dot_n(vectors[i], vectors[i]));

  for (std::size_t bi = 0; bi < bases.size(); ++bi) {
    const auto& basis = bases[bi];
    if (basis.size() != dim)
      throw InputError(InputErrorKind::bad_basis_size,
                       "basis " + std::to_string(bi) + " must have exactly " +
                           std::to_string(dim) + " members");
    for (std::size_t s = 0; s < basis.size(); ++s) {
      const std::int32_t v = basis[s];
      if (v < 0 || static_cast<std::size_t>(v) >= vectors.size())
        throw InputError(InputErrorKind::index_out_of_range,
                         "basis " + std::to_string(bi) + " references vector " +
                             std::to_string(v));
      for (std::size_t t = 0; t < s; ++t)
        if (basis[t] == v)
          throw InputError(InputErrorKind::duplicate_index,
                           "basis " + std::to_string(bi) + " lists vector " +
                               std::to_string(v) + " twice");
      ++rep.multiplicities[static_cast<std::size_t>(v)];
    }
    for (std::size_t s = 0; s < basis.size(); ++s)
      for (std::size_t t = s + 1; t < basis.size(); ++t) {
        const auto& u = vectors[static_cast<std::size_t>(basis[s])];
        const auto& w = vectors[static_cast<std::size_t>(basis[t])];
        Real res = abs(detail::dot_n(u, w)) /
                   (norms[static_cast<std::size_t>(basis[s])] *
                    norms[static_cast<std::size_t>(basis[t])]);
        if (res > rep.max_orthogonality_residual) rep.max_orthogonality_residual = res;
      }
  }

  rep.orthogonality_pass = (rep.max_orthogonality_residual <= tolerance);
  rep.all_multiplicities_even = true;
  rep.min_multiplicity = rep.multiplicities.empty() ? 0 : rep.multiplicities.front();
  for (int m : rep.multiplicities) {
    if (m % 2 != 0) rep.all_multiplicities_even = false;
    if (m < rep.min_multiplicity) rep.min_multiplicity = m;
  }
  rep.multiplicities_pass = rep.all_multiplicities_even && rep.min_multiplicity >= 2 &&
                            !rep.multiplicities.empty();
  rep.verdict = rep.basis_count_odd && rep.orthogonality_pass && rep.multiplicities_pass;
  return rep;
}

// Pairwise linear independence via the Gram criterion: for every unordered
// pair, 1 - (u.v)^2/(|u|^2 |v|^2) must exceed the tolerance. Not folded into
// the KS verdict; reported separately.
template <class Real>
IndependenceReport<Real> check_pairwise_independence(
    const std::vector<std::vector<Real>>& vectors, const Real& tolerance) {
  if (!(tolerance > Real(0)))
    throw InputError(InputErrorKind::bad_tolerance, "tolerance must be positive");
  detail::check_vectors_well_formed(vectors);

  IndependenceReport<Real> rep;
  rep.tolerance = tolerance;
  rep.min_gram = Real(1);
  std::vector<Real> n2(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    n2[i] = detail::dot_n(vectors[i], vectors[i]);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const Real d = detail::dot_n(vectors[i], vectors[j]);
      const Real g = Real(1) - d * d / (n2[i] * n2[j]);
      if (g < rep.min_gram) rep.min_gram = g;
    }
  rep.pass = (rep.min_gram > tolerance);
  return rep;
}

template <class Real>
std::vector<std::vector<Real>> to_vector_lists(const KSInstance<Real>& inst) {
  std::vector<std::vector<Real>> out;
  out.reserve(inst.vectors.size());
  for (const auto& v : inst.vectors) out.push_back({v[0], v[1], v[2], v[3]});
  return out;
}

inline BasisList to_basis_lists(const std::vector<std::array<std::int32_t, 4>>& bases) {
  BasisList out;
  out.reserve(bases.size());
  for (const auto& b : bases) out.push_back({b[0], b[1], b[2], b[3]});
  return out;
}

template <class Real>
VerificationReport<Real> verify_instance(const KSInstance<Real>& inst, const Real& tolerance) {
  return verify_ks_pair<Real>(to_vector_lists(inst), to_basis_lists(inst.bases), tolerance);
}

// The six inner products whose vanishing makes B_0 an orthogonal basis,
// as relative residuals, in this order:
//   (i)   a . b
//   (ii)  a . (Rp^-1 @ Rq^-1) a
//   (iii) b . (Rp^-1 @ Rq)    b
//   (iv)  a . (Rp^-1 @ Rq)    b
//   (v)   a . (Rp   @ Rq)     b
//   (vi)  a . (I    @ Rq^2)   b
// (ii) and (iii) hold only because c^2 balances them; the rest are identities
// in c, which is what the perturbed-c negative control separates.
template <class Real>
std::array<Real, 6> b0_orthogonality_residuals(const KSParams& P, const Real& c) {
  using std::sqrt;
  validate_params(P);
  const auto [a, b] = base_vectors<Real>(P, c);
  const Mat2<Real> i2 = Mat2<Real>::identity();
  const Mat2<Real> rp = rotation<Real>(P.p, P.kp);
  const Mat2<Real> rq = rotation<Real>(P.q, P.kq);
  const Mat2<Real> rp_inv = rotation<Real>(P.p, -P.kp);
  const Mat2<Real> rq_inv = rotation<Real>(P.q, -P.kq);
  const Mat2<Real> rq2 = rotation<Real>(P.q, 2 * P.kq);

  const Real na = sqrt(norm_sq(a));
  const Real nb = sqrt(norm_sq(b));
  // all factors are orthogonal, so |Xv| = |v|
  const auto rel = [](const Real& val, const Real& nu, const Real& nv) {
    using std::abs;
    return abs(val) / (nu * nv);
  };
  return {
      rel(dot(a, b), na, nb),
      rel(dot(a, kron(rp_inv, rq_inv) * a), na, na),
      rel(dot(b, kron(rp_inv, rq) * b), nb, nb),
      rel(dot(a, kron(rp_inv, rq) * b), na, nb),
      rel(dot(a, kron(rp, rq) * b), na, nb),
      rel(dot(a, kron(i2, rq2) * b), na, nb),
  };
}

// Rebuilds the instance with c replaced by c + epsilon and reports whether
// orthogonality now fails at `tolerance`. Expected: true for epsilon >= 1e-3,
// false for epsilon = 0.
template <class Real>
bool negative_control_perturbed_c(const KSParams& P, const Real& epsilon,
                                  const Real& tolerance) {
  const Real c = compute_c<Real>(P) + epsilon;
  const KSInstance<Real> inst = build_instance_with_c<Real>(P, c);
  const VerificationReport<Real> rep = verify_instance<Real>(inst, tolerance);
  return !rep.orthogonality_pass;
}

}  // namespace ks

#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ks/verify.hpp"

namespace ks {

// The counting argument extracted from a passing verification report:
// one marked vector per basis makes the marked-slot total equal to the (odd)
// number of bases, yet summing even per-vector multiplicities makes the same
// total even. Rendered in a canonical text form that parses back losslessly.
struct ParityCertificate {
  std::size_t basis_count = 0;
  std::map<int, int> multiplicity_histogram;  // multiplicity -> #vectors

  std::string to_text() const;
  static ParityCertificate parse(const std::string& text);  // inverse of to_text

  bool operator==(const ParityCertificate&) const = default;
};

// Refuses (throws std::invalid_argument) unless the report verdict is pass;
// a passing report always has odd basis count and even multiplicities.
template <class Real>
ParityCertificate make_parity_certificate(const VerificationReport<Real>& report) {
  if (!report.verdict)
    throw std::invalid_argument("parity certificate requires a passing report");
  if (report.basis_count % 2 == 0)
    throw std::logic_error("passing report with even basis count");
  return ParityCertificate{report.basis_count, report.multiplicity_histogram()};
}

}  // namespace ks

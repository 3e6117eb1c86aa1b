#include "ks/certificate.hpp"

#include <sstream>

namespace ks {

namespace {
constexpr const char* kHeader = "ks-parity-certificate v1";

std::string histogram_field(const std::map<int, int>& h) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mult, count] : h) {
    if (!first) os << ", ";
    os << mult << "x" << count;
    first = false;
  }
  return os.str();
}
}  // namespace

std::string ParityCertificate::to_text() const {
  std::ostringstream os;
  os << kHeader << "\n";
  os << "bases: " << basis_count << "\n";
  os << "multiplicities: " << histogram_field(multiplicity_histogram) << "\n";
  os << "argument: marking exactly one vector per basis puts " << basis_count
     << " marks\n";
  os << "  on the bases, an odd total; counting the same marks vector by vector\n";
  os << "  sums even multiplicities, an even total; no such marking exists.\n";
  return os.str();
}

ParityCertificate ParityCertificate::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kHeader)
    throw std::invalid_argument("parity certificate: bad header");

  ParityCertificate cert;
  if (!std::getline(is, line) || line.rfind("bases: ", 0) != 0)
    throw std::invalid_argument("parity certificate: missing bases line");
  cert.basis_count = std::stoull(line.substr(7));

  if (!std::getline(is, line) || line.rfind("multiplicities: ", 0) != 0)
    throw std::invalid_argument("parity certificate: missing multiplicities line");
  std::istringstream hs(line.substr(16));
  std::string item;
  while (std::getline(hs, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos)
      throw std::invalid_argument("parity certificate: bad histogram entry");
    const int mult = std::stoi(item.substr(0, x));
    const int count = std::stoi(item.substr(x + 1));
    cert.multiplicity_histogram[mult] = count;
  }
  return cert;
}

}  // namespace ks

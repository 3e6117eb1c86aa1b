#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ks/bigfloat.hpp"
#include "ks/coloring.hpp"
#include "ks/construct.hpp"
#include "ks/graph.hpp"
#include "ks/verify.hpp"

namespace ks {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// On-disk instance: coordinates as decimal strings so the same file transports
// double and extended-precision data exactly. `params`/`derived` are absent
// for external vector files that were not generated by this tool.
struct InstanceFile {
  int schema_version = 1;
  std::string generator;
  std::optional<KSParams> params;
  std::optional<std::int64_t> r;
  std::optional<std::string> c_decimal;
  PrecisionInfo precision;
  std::vector<std::vector<std::string>> vectors;  // all rows the same length
  BasisList bases;
};

// 17 significant digits: exact double round-trip.
std::string decimal_string(double x);
std::string decimal_string(const BigFloat& x, unsigned digits);

InstanceFile make_instance_file(const KSInstance<double>& inst);
InstanceFile make_instance_file(const KSInstance<BigFloat>& inst);

// Deterministic bytes for fixed content (sorted keys, fixed formatting).
std::string instance_to_json_text(const InstanceFile& f);
InstanceFile parse_instance_json(const std::string& text);

template <class Real>
std::vector<std::vector<Real>> parse_vectors(const InstanceFile& f);

struct ReportInputs {
  PrecisionInfo precision;
  std::string tolerance_decimal;
  double elapsed_ms = 0.0;
};

template <class Real>
nlohmann::json report_to_json(const VerificationReport<Real>& ks,
                              const IndependenceReport<Real>& indep,
                              const ReportInputs& inputs);

// compact human-readable rendering of the same report
template <class Real>
std::string report_to_text(const VerificationReport<Real>& ks,
                           const IndependenceReport<Real>& indep,
                           const ReportInputs& inputs);

nlohmann::json coloring_to_json(const ColoringResult& r);

nlohmann::json graph_to_adjacency_json(const Graph& g, const std::string& kind);

// graph6 per the standard encoding: N(n) header then the upper triangle
// x(0,1), x(0,2), x(1,2), ... packed 6 bits per printable byte.
std::string graph_to_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
// write to <path>.tmp then rename
void write_text_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace ks

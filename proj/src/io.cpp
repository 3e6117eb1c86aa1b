#include "ks/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ks/certificate.hpp"
#include "ks/version.hpp"

namespace ks {

using nlohmann::json;

std::string decimal_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

std::string decimal_string(const BigFloat& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

namespace {

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw ParseError("bad decimal string: '" + s + "'");
  return v;
}

BigFloat parse_bigfloat(const std::string& s) {
  try {
    return BigFloat(s);
  } catch (const std::exception&) {
    throw ParseError("bad decimal string: '" + s + "'");
  }
}

template <class Real>
Real parse_real(const std::string& s);

template <>
double parse_real<double>(const std::string& s) {
  return parse_double(s);
}

template <>
BigFloat parse_real<BigFloat>(const std::string& s) {
  return parse_bigfloat(s);
}

json precision_to_json(const PrecisionInfo& p) {
  return json{{"mode", p.mode == PrecisionInfo::Mode::extended ? "extended" : "double"},
              {"digits", p.digits}};
}

PrecisionInfo precision_from_json(const json& j) {
  PrecisionInfo p;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "extended")
    p.mode = PrecisionInfo::Mode::extended;
  else if (mode == "double")
    p.mode = PrecisionInfo::Mode::double_precision;
  else
    throw ParseError("unknown precision mode '" + mode + "'");
  p.digits = j.at("digits").get<unsigned>();
  return p;
}

template <class Real>
InstanceFile make_instance_file_impl(const KSInstance<Real>& inst, unsigned digits) {
  InstanceFile f;
  f.schema_version = kInstanceSchemaVersion;
  f.generator = std::string(kToolName) + " " + kToolVersion;
  f.params = inst.params;
  f.r = inst.r;
  if constexpr (std::is_same_v<Real, double>)
    f.c_decimal = decimal_string(inst.c);
  else
    f.c_decimal = decimal_string(inst.c, digits);
  f.precision = inst.precision;
  f.vectors.reserve(inst.vectors.size());
  for (const auto& v : inst.vectors) {
    std::vector<std::string> row;
    row.reserve(4);
    for (std::size_t i = 0; i < 4; ++i) {
      if constexpr (std::is_same_v<Real, double>)
        row.push_back(decimal_string(v[i]));
      else
        row.push_back(decimal_string(v[i], digits));
    }
    f.vectors.push_back(std::move(row));
  }
  f.bases = to_basis_lists(inst.bases);
  return f;
}

}  // namespace

InstanceFile make_instance_file(const KSInstance<double>& inst) {
  return make_instance_file_impl<double>(inst, 17);
}

InstanceFile make_instance_file(const KSInstance<BigFloat>& inst) {
  return make_instance_file_impl<BigFloat>(inst, inst.precision.digits);
}

std::string instance_to_json_text(const InstanceFile& f) {
  json j;
  j["schema_version"] = f.schema_version;
  j["generator"] = f.generator;
  if (f.params) {
    j["params"] = {{"p", f.params->p},
                   {"q", f.params->q},
                   {"k_p", f.params->kp},
                   {"k_q", f.params->kq},
                   {"c_sign", f.params->c_sign}};
  }
  if (f.r || f.c_decimal) {
    json d = json::object();
    if (f.c_decimal) d["c"] = *f.c_decimal;
    if (f.r) d["r"] = *f.r;
    j["derived"] = d;
  }
  j["precision"] = precision_to_json(f.precision);
  j["vectors"] = f.vectors;
  j["bases"] = f.bases;
  return j.dump(2) + "\n";
}

InstanceFile parse_instance_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    InstanceFile f;
    f.schema_version = j.at("schema_version").get<int>();
    if (f.schema_version != kInstanceSchemaVersion)
      throw ParseError("unsupported schema_version " + std::to_string(f.schema_version));
    f.generator = j.value("generator", std::string{});
    if (j.contains("params")) {
      const json& p = j.at("params");
      KSParams P;
      P.p = p.at("p").get<std::int64_t>();
      P.q = p.at("q").get<std::int64_t>();
      P.kp = p.at("k_p").get<std::int64_t>();
      P.kq = p.at("k_q").get<std::int64_t>();
      P.c_sign = p.at("c_sign").get<int>();
      f.params = P;
    }
    if (j.contains("derived")) {
      const json& d = j.at("derived");
      if (d.contains("c")) f.c_decimal = d.at("c").get<std::string>();
      if (d.contains("r")) f.r = d.at("r").get<std::int64_t>();
    }
    if (j.contains("precision")) f.precision = precision_from_json(j.at("precision"));
    f.vectors = j.at("vectors").get<std::vector<std::vector<std::string>>>();
    f.bases = j.at("bases").get<BasisList>();
    if (f.vectors.empty()) throw ParseError("instance has no vectors");
    const std::size_t dim = f.vectors.front().size();
    if (dim == 0) throw ParseError("vectors must be nonempty");
    for (const auto& row : f.vectors)
      if (row.size() != dim) throw ParseError("vectors have mixed dimensions");
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema mismatch: ") + e.what());
  }
}

template <class Real>
std::vector<std::vector<Real>> parse_vectors(const InstanceFile& f) {
  std::vector<std::vector<Real>> out;
  out.reserve(f.vectors.size());
  for (const auto& row : f.vectors) {
    std::vector<Real> v;
    v.reserve(row.size());
    for (const auto& s : row) v.push_back(parse_real<Real>(s));
    out.push_back(std::move(v));
  }
  return out;
}

template std::vector<std::vector<double>> parse_vectors<double>(const InstanceFile&);
template std::vector<std::vector<BigFloat>> parse_vectors<BigFloat>(const InstanceFile&);

namespace {

template <class Real>
std::string residual_string(const Real& x, const PrecisionInfo& p) {
  if constexpr (std::is_same_v<Real, double>)
    return decimal_string(x);
  else
    return decimal_string(x, p.digits);
}

}  // namespace

template <class Real>
json report_to_json(const VerificationReport<Real>& ks, const IndependenceReport<Real>& indep,
                    const ReportInputs& inputs) {
  json mult_hist = json::object();
  for (const auto& [m, c] : ks.multiplicity_histogram())
    mult_hist[std::to_string(m)] = c;

  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = std::string(kToolName) + " " + kToolVersion;
  j["arithmetic"] = precision_to_json(inputs.precision);
  j["tolerance"] = inputs.tolerance_decimal;
  j["timing_ms"] = inputs.elapsed_ms;
  j["ks_pair"] = {
      {"basis_count", ks.basis_count},
      {"basis_count_odd", ks.basis_count_odd},
      {"max_orthogonality_residual", residual_string(ks.max_orthogonality_residual, inputs.precision)},
      {"orthogonality_pass", ks.orthogonality_pass},
      {"multiplicities", ks.multiplicities},
      {"multiplicity_histogram", mult_hist},
      {"all_multiplicities_even", ks.all_multiplicities_even},
      {"min_multiplicity", ks.min_multiplicity},
      {"multiplicities_pass", ks.multiplicities_pass},
      {"verdict", ks.verdict},
  };
  j["independence"] = {
      {"min_gram", residual_string(indep.min_gram, inputs.precision)},
      {"pass", indep.pass},
  };
  j["verdict"] = ks.verdict && indep.pass;
  if (ks.verdict) j["parity_certificate"] = make_parity_certificate(ks).to_text();
  return j;
}

template json report_to_json<double>(const VerificationReport<double>&,
                                     const IndependenceReport<double>&, const ReportInputs&);
template json report_to_json<BigFloat>(const VerificationReport<BigFloat>&,
                                       const IndependenceReport<BigFloat>&, const ReportInputs&);

template <class Real>
std::string report_to_text(const VerificationReport<Real>& ks, const IndependenceReport<Real>& indep,
                           const ReportInputs& inputs) {
  std::ostringstream os;
  const char* mode =
      inputs.precision.mode == PrecisionInfo::Mode::extended ? "extended" : "double";
  os << "ks-pair verdict: " << (ks.verdict ? "PASS" : "FAIL") << " (" << mode << ", "
     << inputs.precision.digits << " digits, tolerance " << inputs.tolerance_decimal
     << ")\n";
  os << "  bases: " << ks.basis_count << (ks.basis_count_odd ? " (odd)" : " (even)")
     << "\n";
  os << "  max orthogonality residual: "
     << residual_string(ks.max_orthogonality_residual, inputs.precision) << " -> "
     << (ks.orthogonality_pass ? "pass" : "fail") << "\n";
  os << "  multiplicities:";
  for (const auto& [m, c] : ks.multiplicity_histogram()) os << " " << m << "x" << c;
  os << " -> " << (ks.multiplicities_pass ? "pass" : "fail") << "\n";
  os << "  independence min gram: " << residual_string(indep.min_gram, inputs.precision)
     << " -> " << (indep.pass ? "pass" : "fail") << "\n";
  return os.str();
}

template std::string report_to_text<double>(const VerificationReport<double>&,
                                            const IndependenceReport<double>&,
                                            const ReportInputs&);
template std::string report_to_text<BigFloat>(const VerificationReport<BigFloat>&,
                                              const IndependenceReport<BigFloat>&,
                                              const ReportInputs&);

json coloring_to_json(const ColoringResult& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["satisfiable"] = r.satisfiable;
  j["nodes_explored"] = r.nodes_explored;
  if (r.assignment) {
    json a = json::array();
    for (const auto v : *r.assignment) a.push_back(static_cast<int>(v));
    j["assignment"] = a;
  } else {
    j["assignment"] = nullptr;
  }
  return j;
}

json graph_to_adjacency_json(const Graph& g, const std::string& kind) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = kind;
  j["vertex_count"] = g.vertex_count;
  j["edge_count"] = g.edges.size();
  j["adjacency"] = g.adjacency();
  return j;
}

std::string graph_to_graph6(const Graph& g) {
  const std::int64_t n = g.vertex_count;
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: more than 258047 vertices unsupported");
  }

  // upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int bit = 5;
  char cur = 0;
  for (std::int32_t col = 1; col < n; ++col)
    for (std::int32_t row = 0; row < col; ++row) {
      if (g.has_edge(row, col)) cur |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        bit = 5;
        cur = 0;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (s[0] == 126) {
    if (s.size() >= 2 && s[1] == 126) throw ParseError("graph6: >258047 vertices unsupported");
    if (s.size() < 4) throw ParseError("graph6: truncated vertex count");
    n = (static_cast<std::int64_t>(s[1] - 63) << 12) |
        (static_cast<std::int64_t>(s[2] - 63) << 6) | static_cast<std::int64_t>(s[3] - 63);
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  if (n < 0) throw ParseError("graph6: bad vertex count");

  const std::int64_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() - pos != nbytes) throw ParseError("graph6: wrong payload length");

  std::vector<Edge> edges;
  std::int64_t bit_index = 0;
  for (std::int32_t col = 1; col < n; ++col)
    for (std::int32_t row = 0; row < col; ++row, ++bit_index) {
      const char byte = s[pos + static_cast<std::size_t>(bit_index / 6)];
      if (byte < 63 || byte > 126) throw ParseError("graph6: byte out of range");
      if ((byte - 63) & (1 << (5 - bit_index % 6))) edges.emplace_back(row, col);
    }
  return Graph::from_edges(static_cast<std::int32_t>(n), std::move(edges));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ks

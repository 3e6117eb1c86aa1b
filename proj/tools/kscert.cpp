#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ks/bigfloat.hpp"
#include "ks/certificate.hpp"
#include "ks/coloring.hpp"
#include "ks/construct.hpp"
#include "ks/graph.hpp"
#include "ks/io.hpp"
#include "ks/params.hpp"
#include "ks/verify.hpp"
#include "ks/version.hpp"

namespace {

using ks::BasisList;
using ks::BigFloat;
using ks::Graph;
using ks::InstanceFile;
using ks::KSParams;
using ks::PrecisionInfo;

// Exit codes (documented in the README):
//   0 success / verification pass / UNSAT certified
//   2 color-search found a SAT witness
//   3 verification or --check failed
//   4 file parse or schema error
//   5 I/O failure
//   6 malformed instance data (bad index, zero vector, duplicate index, ...)
//   10..15 parameter validation errors (see ks::exit_code)

constexpr int kExitSat = 2;
constexpr int kExitVerdictFail = 3;
constexpr int kExitParse = 4;
constexpr int kExitIo = 5;
constexpr int kExitMalformed = 6;

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ks::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ks::exit_code(e.code());
  } catch (const ks::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ks::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

PrecisionInfo parse_precision_flag(const std::string& s) {
  if (s == "double") return {PrecisionInfo::Mode::double_precision, 17};
  if (s == "extended") return {PrecisionInfo::Mode::extended, 60};
  std::size_t used = 0;
  unsigned long digits = 0;
  try {
    digits = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || digits < 10 || digits > 100000)
    throw CLI::ValidationError("--precision",
                               "expected 'double', 'extended', or a digit count >= 10");
  return {PrecisionInfo::Mode::extended, static_cast<unsigned>(digits)};
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path) {
    ks::write_text_file_atomic(*out_path, content);
  } else {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << "\n";
  }
}

struct VerifyOutcome {
  nlohmann::json report;
  std::string text;
  bool pass = false;
};

template <class Real>
VerifyOutcome verify_with(const InstanceFile& file, double tolerance, PrecisionInfo prec) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto vectors = ks::parse_vectors<Real>(file);
  const Real tol(tolerance);
  const auto rep = ks::verify_ks_pair<Real>(vectors, file.bases, tol);
  const auto indep = ks::check_pairwise_independence<Real>(vectors, tol);
  const auto t1 = std::chrono::steady_clock::now();

  ks::ReportInputs inputs;
  inputs.precision = prec;
  inputs.tolerance_decimal = ks::decimal_string(tolerance);
  inputs.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  VerifyOutcome out;
  out.report = ks::report_to_json<Real>(rep, indep, inputs);
  out.text = ks::report_to_text<Real>(rep, indep, inputs);
  out.pass = rep.verdict && indep.pass;
  return out;
}

// instance parameters needed by the graph subcommand
struct RingParams {
  std::int64_t n = 0;
  std::int64_t r = 0;
};

RingParams ring_params(const InstanceFile& file) {
  if (!file.params)
    throw ks::ParseError("this operation needs a generated instance (params missing)");
  RingParams rp;
  rp.n = file.params->p * file.params->q;
  rp.r = file.r ? *file.r : ks::crt_r(file.params->p, file.params->q);
  return rp;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(ks::kToolName) +
               " - generate and certify parity-proof vector systems in R^4"};
  app.set_version_flag("--version", std::string(ks::kToolName) + " " + ks::kToolVersion);
  app.require_subcommand(1);

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "construct an instance and emit its JSON file");
  std::int64_t gp = 0, gq = 0;
  std::optional<std::int64_t> gkp, gkq;
  int gsign = +1;
  bool gnorm = false;
  std::string gprec = "double";
  std::optional<std::string> gout;
  gen->add_option("--p", gp, "first odd modulus (>= 3)")->required();
  gen->add_option("--q", gq, "second odd modulus (>= 3, coprime to p)")->required();
  gen->add_option("--kp", gkp, "multiplier for p (default: the x/4 rule)");
  gen->add_option("--kq", gkq, "multiplier for q (default: the x/4 rule)");
  gen->add_option("--c-sign", gsign, "sign of c: +1 or -1")->check(CLI::IsMember({1, -1}));
  gen->add_flag("--normalize", gnorm, "serialize unit-normalized vectors");
  gen->add_option("--precision", gprec, "double | extended | <decimal digits>");
  gen->add_option("--out", gout, "output path (default: stdout)");

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "check the parity-pair properties of a file");
  std::string vin;
  double vtol = 1e-9;
  std::string vprec = "double";
  std::optional<std::string> vout;
  ver->add_option("input", vin, "instance JSON file")->required();
  ver->add_option("--tolerance", vtol, "relative orthogonality tolerance (default 1e-9)");
  ver->add_option("--precision", vprec, "double | extended | <decimal digits>");
  ver->add_option("--out", vout, "report path (default: stdout)");

  // ---- color-search ----
  auto* col = app.add_subcommand("color-search",
                                 "exhaustive search for a one-per-basis {0,1} marking");
  std::string cin_path;
  std::optional<std::string> cout_path;
  col->add_option("input", cin_path, "instance JSON file")->required();
  col->add_option("--out", cout_path, "result path (default: stdout)");

  // ---- graph ----
  auto* gra = app.add_subcommand("graph", "export the instance graphs");
  std::string gin, gkind, gformat = "json";
  bool gcheck = false;
  std::optional<std::string> ggout;
  gra->add_option("input", gin, "instance JSON file")->required();
  gra->add_option("--kind", gkind, "chordal-ring | comembership | line-graph")
      ->required()
      ->check(CLI::IsMember({"chordal-ring", "comembership", "line-graph"}));
  gra->add_option("--format", gformat, "json | graph6")
      ->check(CLI::IsMember({"json", "graph6"}));
  gra->add_flag("--check", gcheck,
                "also verify line-graph equality and transitivity witnesses");
  gra->add_option("--out", ggout, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    return run_guarded([&]() -> int {
      const PrecisionInfo prec = parse_precision_flag(gprec);
      KSParams P;
      P.p = gp;
      P.q = gq;
      const bool p_ok = gp >= 3 && gp % 2 == 1;
      const bool q_ok = gq >= 3 && gq % 2 == 1;
      P.kp = gkp ? *gkp : (p_ok ? ks::default_k(gp) : 1);
      P.kq = gkq ? *gkq : (q_ok ? ks::default_k(gq) : 1);
      P.c_sign = gsign;
      std::string text;
      if (prec.mode == PrecisionInfo::Mode::double_precision) {
        auto inst = ks::build_instance<double>(P, prec);
        if (gnorm) inst = ks::unit_normalized(std::move(inst));
        text = ks::instance_to_json_text(ks::make_instance_file(inst));
      } else {
        ks::PrecisionScope scope(prec.digits);
        auto inst = ks::build_instance<BigFloat>(P, prec);
        if (gnorm) inst = ks::unit_normalized(std::move(inst));
        text = ks::instance_to_json_text(ks::make_instance_file(inst));
      }
      emit(gout, text);
      return 0;
    });
  }

  if (ver->parsed()) {
    return run_guarded([&]() -> int {
      const PrecisionInfo prec = parse_precision_flag(vprec);
      const InstanceFile file = ks::parse_instance_json(ks::read_text_file(vin));
      VerifyOutcome outcome;
      if (prec.mode == PrecisionInfo::Mode::double_precision) {
        outcome = verify_with<double>(file, vtol, prec);
      } else {
        ks::PrecisionScope scope(prec.digits);
        outcome = verify_with<BigFloat>(file, vtol, prec);
      }
      emit(vout, outcome.report.dump(2) + "\n");
      std::cerr << outcome.text;
      return outcome.pass ? 0 : kExitVerdictFail;
    });
  }

  if (col->parsed()) {
    return run_guarded([&]() -> int {
      const InstanceFile file = ks::parse_instance_json(ks::read_text_file(cin_path));
      const auto result = ks::brute_force_coloring_search(file.vectors.size(), file.bases);
      emit(cout_path, ks::coloring_to_json(result).dump(2) + "\n");
      return result.satisfiable ? kExitSat : 0;
    });
  }

  if (gra->parsed()) {
    return run_guarded([&]() -> int {
      const InstanceFile file = ks::parse_instance_json(ks::read_text_file(gin));

      Graph g;
      if (gkind == "comembership") {
        g = ks::comembership_graph(file.vectors.size(), file.bases);
      } else {
        const RingParams rp = ring_params(file);
        if (gkind == "chordal-ring")
          g = ks::chordal_ring(rp.n, rp.r);
        else
          g = ks::line_graph_on_labels(
                  static_cast<std::int32_t>(rp.n),
                  ks::chordal_ring_edge_labels(rp.n, rp.r))
                  .graph;
      }

      std::string graph_text;
      nlohmann::json graph_json;
      if (gformat == "graph6") {
        graph_text = ks::graph_to_graph6(g) + "\n";
      } else {
        graph_json = ks::graph_to_adjacency_json(g, gkind);
        graph_text = graph_json.dump(2) + "\n";
      }

      if (!gcheck) {
        emit(ggout, graph_text);
        return 0;
      }

      const RingParams rp = ring_params(file);
      const Graph ring = ks::chordal_ring(rp.n, rp.r);
      const Graph comem = ks::comembership_graph(file.vectors.size(), file.bases);
      const Graph lg = ks::line_graph_on_labels(
                           static_cast<std::int32_t>(rp.n),
                           ks::chordal_ring_edge_labels(rp.n, rp.r))
                           .graph;
      const auto et = ks::check_edge_transitivity(rp.n, rp.r);
      const auto vt = ks::check_comembership_vertex_transitivity(rp.n, rp.r, comem);

      const bool equality = (comem == lg);
      const bool pass = equality && et.edge_transitive && et.multiplier_is_automorphism &&
                        et.multiplier_swaps_edge_types && vt.vertex_transitive;

      nlohmann::json out;
      out["schema_version"] = ks::kReportSchemaVersion;
      if (gformat == "graph6")
        out["graph"] = ks::graph_to_graph6(g);
      else
        out["graph"] = graph_json;
      out["checks"] = {
          {"line_graph_equality", equality},
          {"multiplier_is_automorphism", et.multiplier_is_automorphism},
          {"multiplier_swaps_edge_types", et.multiplier_swaps_edge_types},
          {"edge_orbit_size", et.edge_orbit},
          {"edge_count", ring.edges.size()},
          {"edge_transitive", et.edge_transitive},
          {"vertex_orbit_size", vt.orbit},
          {"vertex_count", comem.vertex_count},
          {"vertex_transitive", vt.vertex_transitive},
          {"pass", pass},
      };
      emit(ggout, out.dump(2) + "\n");
      return pass ? 0 : kExitVerdictFail;
    });
  }

  return 0;
}

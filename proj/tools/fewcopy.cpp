// Copyright 2026 The fewcopy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line harness for the few-copy entanglement detection toolkit.
// Every command writes CSV (optionally JSON) plus a run manifest that can be
// replayed to reproduce the output byte for byte.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fewcopy/baseline.hpp"
#include "fewcopy/detector.hpp"
#include "fewcopy/fidelity.hpp"
#include "fewcopy/format.hpp"
#include "fewcopy/rng.hpp"
#include "fewcopy/states.hpp"

namespace {

using nlohmann::json;
namespace fc = fewcopy;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

int run_cli(const std::vector<std::string>& args, bool is_replay);

// Relative output paths resolve against FEWCOPY_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("FEWCOPY_OUT_DIR")) {
      p = std::filesystem::path(dir) / p;
    }
  }
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  return p;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p, std::ios::binary);  // binary: no platform newline mangling
  if (!f) throw std::runtime_error("cannot open output file '" + p.string() + "'");
  return f;
}

class ManifestWriter {
 public:
  ManifestWriter(std::string command, std::vector<std::string> argv,
                 std::uint64_t seed)
      : start_(std::chrono::steady_clock::now()) {
    manifest_["command"] = std::move(command);
    manifest_["argv"] = std::move(argv);
    manifest_["rng_seed"] = seed;
    manifest_["artifact_version"] = kVersion;
  }

  void set_parameters(json params) { manifest_["parameters"] = std::move(params); }
  void add_output(const std::filesystem::path& p) {
    manifest_["outputs"].push_back(p.string());
  }

  void write(const std::filesystem::path& primary_output) {
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start_);
    manifest_["duration_seconds"] = elapsed.count();
    auto path = primary_output;
    path += ".manifest.json";
    auto f = open_out(path);
    f << manifest_.dump(2) << "\n";
  }

 private:
  json manifest_;
  std::chrono::steady_clock::time_point start_;
};

std::string trial_path(const std::string& out, std::int64_t trial,
                       std::int64_t trials) {
  if (trials <= 1) return out;
  const auto dot = out.rfind('.');
  const std::string suffix = "_trial" + std::to_string(trial);
  if (dot == std::string::npos || dot == 0) return out + suffix;
  return out.substr(0, dot) + suffix + out.substr(dot);
}

// --- confidence-curve ------------------------------------------------------

struct CurveOpts {
  std::vector<double> lambdas;
  int n = 4;
  std::int64_t max_copies = 200;
  std::string out = "confidence_curve.csv";
  std::string format = "csv";
};

int cmd_confidence_curve(const CurveOpts& opts,
                         const std::vector<std::string>& argv) {
  ManifestWriter manifest("confidence-curve", argv, 0);
  manifest.set_parameters(json{{"lambda", opts.lambdas},
                               {"n", opts.n},
                               {"max_copies", opts.max_copies},
                               {"format", opts.format}});

  const double limit = fc::lambda_limit(opts.n);
  for (double lambda : opts.lambdas) {
    if (lambda >= limit) {
      throw std::domain_error(
          "lambda = " + fc::format_number(lambda) +
          " is at or beyond the noise limit 2^n/(2(2^n-1)) = " +
          fc::format_number(limit) + " for n = " + std::to_string(opts.n));
    }
  }

  const auto path = resolve_out(opts.out);
  auto f = open_out(path);
  if (opts.format == "json") {
    json rows = json::array();
    for (double lambda : opts.lambdas) {
      for (const auto& [copies, c_min] :
           fc::confidence_curve(lambda, opts.n, fc::kStabilizerSeparableBound,
                                opts.max_copies)) {
        rows.push_back({{"n_copies", copies},
                        {"c_min", c_min},
                        {"lambda", lambda}});
      }
    }
    f << rows.dump(2) << "\n";
  } else {
    f << "n_copies,c_min,lambda\n";
    for (double lambda : opts.lambdas) {
      for (const auto& [copies, c_min] :
           fc::confidence_curve(lambda, opts.n, fc::kStabilizerSeparableBound,
                                opts.max_copies)) {
        f << copies << ',' << fc::format_number(c_min) << ','
          << fc::format_number(lambda) << '\n';
      }
    }
  }
  manifest.add_output(path);
  manifest.write(path);
  return kExitOk;
}

// --- trace -----------------------------------------------------------------

struct TraceOpts {
  double lambda = 0.0;
  std::string graph = "c4";
  std::int64_t copies = 100;
  std::uint64_t seed = 0;
  std::int64_t trials = 1;
  std::string mode = "analytic";
  std::string out = "trace.csv";
};

int cmd_trace(const TraceOpts& opts, const std::vector<std::string>& argv) {
  ManifestWriter manifest("trace", argv, opts.seed);
  manifest.set_parameters(json{{"lambda", opts.lambda},
                               {"graph", opts.graph},
                               {"copies", opts.copies},
                               {"trials", opts.trials},
                               {"mode", opts.mode}});

  const fc::GraphState graph = fc::parse_graph_spec(opts.graph);
  const int n = graph.n_qubits();
  const auto obs = fc::observable_set_from_witness(graph);

  // Theoretical overlay; empty beyond the noise limit where no curve exists.
  std::vector<double> theory(opts.copies,
                             std::numeric_limits<double>::quiet_NaN());
  if (fc::expected_p_e(opts.lambda, n) > fc::kStabilizerSeparableBound) {
    const auto curve = fc::confidence_curve(
        opts.lambda, n, fc::kStabilizerSeparableBound, opts.copies);
    for (std::size_t i = 0; i < curve.size(); ++i) theory[i] = curve[i].second;
  }

  std::filesystem::path first_path;
  for (std::int64_t trial = 0; trial < opts.trials; ++trial) {
    fc::ProtocolConfig cfg{
        obs, fc::NoisyState(graph, opts.lambda), opts.copies, 0.99,
        opts.trials == 1 ? opts.seed : fc::derive_seed(opts.seed, trial),
        opts.mode == "oracle" ? fc::ProtocolConfig::Mode::kOracle
                              : fc::ProtocolConfig::Mode::kAnalytic};
    const auto trace = fc::run_protocol(cfg);

    const auto path = resolve_out(trial_path(opts.out, trial, opts.trials));
    if (trial == 0) first_path = path;
    auto f = open_out(path);
    f << "copy_index,observable_mask,pauli_string,outcome,cumulative_s,"
         "p_e_obs,delta,c_min,conclusive,c_min_theory\n";
    for (const auto& rec : trace.records) {
      f << rec.copy_index << ',' << rec.observable_mask << ','
        << obs.source_group().element(rec.observable_mask).str() << ','
        << rec.outcome << ',' << rec.cumulative_s << ','
        << fc::format_number(rec.p_e_obs) << ','
        << fc::format_number(rec.delta) << ',' << fc::format_number(rec.c_min)
        << ',' << (rec.conclusive ? 1 : 0) << ','
        << fc::format_number(theory[rec.copy_index]) << '\n';
    }
    manifest.add_output(path);

    const bool entangled =
        trace.verdict == fc::ConfidenceTrace::Verdict::kEntangled;
    std::cout << "trial " << trial << ": "
              << (entangled ? "entangled, C_min = " +
                                  fc::format_number(trace.final_confidence)
                            : std::string("inconclusive"))
              << "\n";
  }
  manifest.write(first_path);
  return kExitOk;
}

// --- noise-limit -------------------------------------------------------------

struct NoiseLimitOpts {
  int n = 0;
  std::string graph;
  std::string out;
};

int cmd_noise_limit(const NoiseLimitOpts& opts,
                    const std::vector<std::string>& argv) {
  int n = opts.n;
  double limit = 0.0;
  if (!opts.graph.empty()) {
    const fc::GraphState g = fc::parse_graph_spec(opts.graph);
    n = g.n_qubits();
    limit = fc::witness_lambda_limit(g);
  } else {
    if (n < 1) throw std::domain_error("noise-limit: give --n or --graph");
    limit = fc::lambda_limit(n);
  }
  std::cout << "n_qubits = " << n
            << ", lambda_limit = " << fc::format_number(limit) << "\n";
  if (!opts.out.empty()) {
    ManifestWriter manifest("noise-limit", argv, 0);
    manifest.set_parameters(json{{"n", n}, {"graph", opts.graph}});
    const auto path = resolve_out(opts.out);
    auto f = open_out(path);
    f << "n_qubits,lambda_limit\n";
    f << n << ',' << fc::format_number(limit) << '\n';
    manifest.add_output(path);
    manifest.write(path);
  }
  return kExitOk;
}

// --- witness-compare ---------------------------------------------------------

struct WitnessCompareOpts {
  std::vector<double> lambdas;
  double epsilon = 0.02;
  double cl = 0.95;
  std::int64_t q = 0;  // 0 selects 2^n
  int n = 4;
  double c0 = 0.99;
  std::string out = "witness_compare.csv";
};

int cmd_witness_compare(const WitnessCompareOpts& opts,
                        const std::vector<std::string>& argv) {
  ManifestWriter manifest("witness-compare", argv, 0);
  manifest.set_parameters(json{{"lambda", opts.lambdas},
                               {"epsilon", opts.epsilon},
                               {"cl", opts.cl},
                               {"q", opts.q},
                               {"n", opts.n},
                               {"c0", opts.c0}});

  const auto path = resolve_out(opts.out);
  auto f = open_out(path);
  f << "lambda,epsilon,confidence_level,q_terms,shots_per_term,total_shots,"
       "fewcopy_n_max,ratio\n";
  for (double lambda : opts.lambdas) {
    const auto est = fc::witness_total_cost(opts.n, lambda, opts.epsilon,
                                            opts.cl, opts.q);
    const double delta =
        fc::expected_p_e(lambda, opts.n) - fc::kStabilizerSeparableBound;
    const double n_max =
        fc::max_copies(opts.c0, fc::kStabilizerSeparableBound, delta);
    const double ratio = static_cast<double>(est.total_shots) / n_max;
    f << fc::format_number(lambda) << ',' << fc::format_number(opts.epsilon)
      << ',' << fc::format_number(opts.cl) << ',' << est.n_terms << ','
      << est.shots_per_term << ',' << est.total_shots << ','
      << fc::format_number(n_max) << ',' << fc::format_number(ratio) << '\n';
    std::cout << "lambda " << fc::format_number(lambda) << ": witness "
              << est.total_shots << " shots vs few-copy N_max "
              << fc::format_number(n_max) << " (ceil "
              << static_cast<std::int64_t>(std::ceil(n_max)) << "), ratio "
              << fc::format_number(ratio) << "\n";
  }
  manifest.add_output(path);
  manifest.write(path);
  return kExitOk;
}

// --- fidelity ----------------------------------------------------------------

struct FidelityOpts {
  double lambda = 0.0;
  std::string graph = "c4";
  std::int64_t copies = 1000;
  std::uint64_t seed = 0;
  std::string out = "fidelity.csv";
};

int cmd_fidelity(const FidelityOpts& opts,
                 const std::vector<std::string>& argv) {
  ManifestWriter manifest("fidelity", argv, opts.seed);
  manifest.set_parameters(json{{"lambda", opts.lambda},
                               {"graph", opts.graph},
                               {"copies", opts.copies}});

  const fc::GraphState graph = fc::parse_graph_spec(opts.graph);
  fc::ProtocolConfig cfg{fc::observable_set_from_witness(graph),
                         fc::NoisyState(graph, opts.lambda), opts.copies, 0.99,
                         opts.seed};
  const auto trace = fc::run_protocol(cfg);
  const auto est = fc::fidelity_from_trace(trace);
  const double expected = fc::expected_fidelity(opts.lambda, graph.n_qubits());

  const auto path = resolve_out(opts.out);
  auto f = open_out(path);
  f << "lambda,n_qubits,n_copies,f_hat,std_error,f_expected\n";
  f << fc::format_number(opts.lambda) << ',' << graph.n_qubits() << ','
    << est.n_copies_used << ',' << fc::format_number(est.f_hat) << ','
    << fc::format_number(est.std_error) << ',' << fc::format_number(expected)
    << '\n';
  manifest.add_output(path);
  manifest.write(path);

  std::cout << "f_hat = " << fc::format_number(est.f_hat) << " +/- "
            << fc::format_number(est.std_error)
            << " (model: " << fc::format_number(expected) << ")\n";
  return kExitOk;
}

// --- replay ------------------------------------------------------------------

int cmd_replay(const std::string& manifest_path) {
  std::ifstream f(manifest_path);
  if (!f) {
    throw std::runtime_error("cannot open manifest '" + manifest_path + "'");
  }
  json manifest;
  f >> manifest;
  std::vector<std::string> argv =
      manifest.at("argv").get<std::vector<std::string>>();
  if (argv.empty()) throw std::runtime_error("manifest has empty argv");
  return run_cli(argv, /*is_replay=*/true);
}

int run_cli(const std::vector<std::string>& args, bool is_replay) {
  CLI::App app{"few-copy probabilistic entanglement detection toolkit"};
  app.set_config("--config", "", "key=value config file (flags override)");

  CurveOpts curve;
  auto* sc_curve = app.add_subcommand(
      "confidence-curve", "theoretical C_min(N) curves per noise level");
  sc_curve->add_option("--lambda", curve.lambdas, "noise levels")
      ->required()
      ->delimiter(',');
  sc_curve->add_option("--n", curve.n, "number of qubits");
  sc_curve->add_option("--max-copies", curve.max_copies, "curve length");
  sc_curve->add_option("--out", curve.out, "output CSV/JSON path");
  sc_curve->add_option("--format", curve.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  TraceOpts trace;
  auto* sc_trace = app.add_subcommand(
      "trace", "simulated per-copy confidence traces (Bernoulli sampling)");
  sc_trace->add_option("--lambda", trace.lambda, "noise level")->required();
  sc_trace->add_option("--graph", trace.graph,
                       "graph spec: linear:N, c4, or edge-list file");
  sc_trace->add_option("--copies", trace.copies, "copies per trial");
  sc_trace->add_option("--seed", trace.seed, "RNG seed");
  sc_trace->add_option("--trials", trace.trials, "independent trials");
  sc_trace->add_option("--mode", trace.mode, "analytic or oracle")
      ->check(CLI::IsMember({"analytic", "oracle"}));
  sc_trace->add_option("--out", trace.out, "output CSV path");

  NoiseLimitOpts noise;
  auto* sc_noise = app.add_subcommand(
      "noise-limit", "maximum tolerated white-noise fraction");
  sc_noise->add_option("--n", noise.n, "number of qubits");
  sc_noise->add_option("--graph", noise.graph, "graph spec");
  sc_noise->add_option("--out", noise.out, "optional output CSV path");

  WitnessCompareOpts cmp;
  auto* sc_cmp = app.add_subcommand(
      "witness-compare",
      "standard witness shot budget vs few-copy copy budget");
  sc_cmp->add_option("--lambda", cmp.lambdas, "noise levels")
      ->required()
      ->delimiter(',');
  sc_cmp->add_option("--epsilon", cmp.epsilon, "accuracy target");
  sc_cmp->add_option("--cl", cmp.cl, "confidence level");
  sc_cmp->add_option("--q", cmp.q, "local terms (0 = 2^n)");
  sc_cmp->add_option("--n", cmp.n, "number of qubits");
  sc_cmp->add_option("--c0", cmp.c0, "few-copy target confidence");
  sc_cmp->add_option("--out", cmp.out, "output CSV path");

  FidelityOpts fid;
  auto* sc_fid = app.add_subcommand(
      "fidelity", "fidelity estimate from protocol data (no extra samples)");
  sc_fid->add_option("--lambda", fid.lambda, "noise level")->required();
  sc_fid->add_option("--graph", fid.graph, "graph spec");
  sc_fid->add_option("--copies", fid.copies, "copies");
  sc_fid->add_option("--seed", fid.seed, "RNG seed");
  sc_fid->add_option("--out", fid.out, "output CSV path");

  std::string manifest_path;
  auto* sc_replay =
      app.add_subcommand("replay", "re-run a command from its manifest");
  sc_replay->add_option("manifest", manifest_path, "path to *.manifest.json")
      ->required();

  app.require_subcommand(1);

  try {
    // CLI11 parses reversed argv without the program name.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sc_curve->parsed()) return cmd_confidence_curve(curve, args);
    if (sc_trace->parsed()) return cmd_trace(trace, args);
    if (sc_noise->parsed()) return cmd_noise_limit(noise, args);
    if (sc_cmp->parsed()) return cmd_witness_compare(cmp, args);
    if (sc_fid->parsed()) return cmd_fidelity(fid, args);
    if (sc_replay->parsed()) {
      if (is_replay) throw std::runtime_error("nested replay refused");
      return cmd_replay(manifest_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, /*is_replay=*/false);
}

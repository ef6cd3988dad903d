// sigsurf: signature of the surface singularity z^N + g(x,y) = 0.
//
// Exit status: 0 success, 1 computational or consensus failure, 2 input error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigsurf/bench.hpp"
#include "sigsurf/brieskorn.hpp"
#include "sigsurf/error.hpp"
#include "sigsurf/file_formats.hpp"
#include "sigsurf/portfolio.hpp"

namespace {

using namespace sigsurf;

struct InputOptions {
  std::string pairs;
  std::string graph;
  std::string sppairs;
  std::string poly;
  std::vector<std::int64_t> brieskorn;
  std::optional<std::int64_t> n;
  bool json = false;
};

void add_job_options(CLI::App* cmd, InputOptions& in) {
  auto* pairs = cmd->add_option("--pairs", in.pairs, "Puiseux pairs file");
  auto* graph = cmd->add_option("--graph", in.graph, "resolution graph file");
  auto* sp = cmd->add_option("--sppairs", in.sppairs, "spectral pairs file");
  auto* poly = cmd->add_option("--poly", in.poly, "polynomial g(x,y)");
  auto* bri = cmd->add_option("--brieskorn", in.brieskorn, "exponents C1 C2 C3")->expected(3);
  for (auto* a : {pairs, graph, sp, poly, bri}) {
    for (auto* b : {pairs, graph, sp, poly, bri}) {
      if (a != b) a->excludes(b);
    }
  }
  cmd->add_option("-N", in.n, "z exponent N >= 2");
  cmd->add_flag("--json", in.json, "emit JSON");
}

std::int64_t require_n(const InputOptions& in) {
  if (!in.n) throw Error(Errc::invalid_argument, "-N is required");
  return *in.n;
}

JobSpec job_from(const InputOptions& in) {
  if (!in.brieskorn.empty()) return brieskorn_job({in.brieskorn[0], in.brieskorn[1], in.brieskorn[2]}, in.n);
  const std::int64_t n = require_n(in);
  if (!in.pairs.empty()) return {n, parse_pairs_file(read_text_file(in.pairs))};
  if (!in.graph.empty()) return {n, parse_graph_file(read_text_file(in.graph))};
  if (!in.sppairs.empty()) return {n, parse_spectral_file(read_text_file(in.sppairs))};
  if (!in.poly.empty()) return {n, PolynomialInput{in.poly}};
  throw Error(Errc::invalid_argument, "one of --pairs, --graph, --sppairs, --poly, --brieskorn is required");
}

void print_result(const SignatureResult& r, std::int64_t n, bool json) {
  if (json) {
    std::cout << result_to_json(r, n);
    return;
  }
  std::cout << "signature: " << r.value << "\n"
            << "approach:  " << approach_name(r.approach) << "\n";
  if (r.eta_n) std::cout << "eta(g," << n << "): " << r.eta_n->str() << "\n";
  if (r.eta_1) std::cout << "eta(g,1): " << r.eta_1->str() << "\n";
  std::cout << "time:      " << std::fixed << std::setprecision(6)
            << std::chrono::duration<double>(r.wall_time).count() << " s\n";
  for (const auto& note : r.notes) std::cout << "note:      " << note << "\n";
}

void print_report(const VerificationReport& report, std::int64_t n, bool json) {
  if (json) {
    std::cout << report_to_json(report, n);
    return;
  }
  for (const auto& e : report.engines) {
    std::cout << approach_name(e.approach) << ": ";
    if (e.result) {
      std::cout << e.result->value;
      if (e.result->eta_n) std::cout << "  eta(g," << n << ")=" << e.result->eta_n->str();
      if (e.result->eta_1) std::cout << "  eta(g,1)=" << e.result->eta_1->str();
      std::cout << "  " << std::chrono::duration<double>(e.result->wall_time).count() << " s";
    } else {
      std::cout << "error: " << e.error;
    }
    std::cout << "\n";
  }
  std::cout << "consensus: " << (report.consensus ? "yes" : "no") << "\n";
  if (report.value) std::cout << "signature: " << *report.value << "\n";
}

SignatureResult single(const EngineTask& task) { return task.run({}); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature of surface singularities z^N + g(x,y) = 0"};
  app.require_subcommand(1);

  InputOptions puiseux_in, resolution_in, spectral_in, race_in, verify_in;
  auto* puiseux = app.add_subcommand("puiseux", "Puiseux pairs approach");
  puiseux->add_option("--pairs", puiseux_in.pairs, "Puiseux pairs file")->required();
  puiseux->add_option("-N", puiseux_in.n, "z exponent N >= 2")->required();
  puiseux->add_flag("--json", puiseux_in.json, "emit JSON");

  auto* resolution = app.add_subcommand("resolution", "resolution graph approach");
  resolution->add_option("--graph", resolution_in.graph, "resolution graph file")->required();
  resolution->add_option("-N", resolution_in.n, "z exponent N >= 2")->required();
  resolution->add_flag("--json", resolution_in.json, "emit JSON");

  auto* spectral = app.add_subcommand("spectral", "spectral pairs approach");
  spectral->add_option("--sppairs", spectral_in.sppairs, "spectral pairs file")->required();
  spectral->add_option("-N", spectral_in.n, "z exponent N >= 2")->required();
  spectral->add_flag("--json", spectral_in.json, "emit JSON");

  std::vector<std::int64_t> exps;
  bool brieskorn_json = false;
  auto* brieskorn = app.add_subcommand("brieskorn", "signature of x^C1 + y^C2 + z^C3 by lattice counting");
  brieskorn->add_option("exponents", exps, "C1 C2 C3")->expected(3)->required();
  brieskorn->add_flag("--json", brieskorn_json, "emit JSON");

  auto* race_cmd = app.add_subcommand("race", "run all applicable engines, first result wins");
  add_job_options(race_cmd, race_in);
  auto* verify_cmd = app.add_subcommand("verify", "run all applicable engines and check they agree");
  add_job_options(verify_cmd, verify_in);

  std::string suite_file, out_file;
  auto* bench = app.add_subcommand("bench", "time every engine on a fixture suite");
  bench->add_option("--suite", suite_file, "suite file")->required();
  bench->add_option("--out", out_file, "report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (puiseux->parsed()) {
      JobSpec job{*puiseux_in.n, parse_pairs_file(read_text_file(puiseux_in.pairs))};
      auto tasks = engine_tasks(job);
      print_result(single(tasks.front()), job.n, puiseux_in.json);
    } else if (resolution->parsed()) {
      JobSpec job{*resolution_in.n, parse_graph_file(read_text_file(resolution_in.graph))};
      print_result(single(engine_tasks(job).front()), job.n, resolution_in.json);
    } else if (spectral->parsed()) {
      JobSpec job{*spectral_in.n, parse_spectral_file(read_text_file(spectral_in.sppairs))};
      print_result(single(engine_tasks(job).front()), job.n, spectral_in.json);
    } else if (brieskorn->parsed()) {
      BrieskornExponents c(exps[0], exps[1], exps[2]);
      SCounts s = s_counts_fast(c);
      std::int64_t sigma = s.s0 - s.s1 + s.s2;
      if (brieskorn_json) {
        std::cout << "{\"signature\": " << sigma << ", \"S0\": " << s.s0 << ", \"S1\": " << s.s1
                  << ", \"S2\": " << s.s2 << ", \"integral\": " << s.z_integer << "}\n";
      } else {
        std::cout << "signature: " << sigma << "\n"
                  << "S0 = " << s.s0 << ", S1 = " << s.s1 << ", S2 = " << s.s2 << ", integral sums = " << s.z_integer
                  << "\n";
      }
    } else if (race_cmd->parsed()) {
      JobSpec job = job_from(race_in);
      print_result(race_signature(job), job.n, race_in.json);
    } else if (verify_cmd->parsed()) {
      JobSpec job = job_from(verify_in);
      VerificationReport report = run_all(engine_tasks(job));
      print_report(report, job.n, verify_in.json);
      require_consensus(report);
    } else if (bench->parsed()) {
      std::filesystem::path suite_path(suite_file);
      BenchSuite suite = parse_bench_suite(read_text_file(suite_path), suite_path.parent_path());
      std::string report = bench_report_to_json(run_benchmarks(suite));
      if (out_file.empty()) {
        std::cout << report;
      } else {
        write_text_file(out_file, report);
      }
    }
  } catch (const Error& e) {
    std::cerr << "sigsurf: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "sigsurf: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigsurf/brieskorn.hpp"
#include "sigsurf/portfolio.hpp"

namespace sigsurf {

struct BenchFixture {
  std::string name;
  JobSpec job;
};

// Suite file:
//   {"fixtures": [{"name": "g1", "N": 5, "pairs": [[3,2],[7,2],[15,2]]},
//                 {"name": "g5", "N": 6, "graph_file": "g5_graph.json"}, ...],
//    "counter_scaling": [[100,100,100], ...]}
// A fixture carries exactly one of pairs, graph, graph_file, sppairs,
// sppairs_file, brieskorn or poly. File references are relative to
// `base_dir`.
struct BenchSuite {
  std::vector<BenchFixture> fixtures;
  std::vector<BrieskornExponents> counter_scaling;
};

BenchSuite parse_bench_suite(std::string_view text, const std::filesystem::path& base_dir = {});

struct BenchRow {
  std::string fixture;
  std::string engine;
  std::optional<std::int64_t> value;
  std::string error;
  double seconds = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

// Times every applicable engine on every fixture sequentially, and the naive
// and fast lattice counters on each counter_scaling triple.
BenchReport run_benchmarks(const BenchSuite& suite);

std::string bench_report_to_json(const BenchReport& report);

}  // namespace sigsurf

#include "sigsurf/bench.hpp"

#include <chrono>

#include <json.hpp>

#include "sigsurf/error.hpp"
#include "sigsurf/file_formats.hpp"

namespace sigsurf {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

JobSpec fixture_job(const ordered_json& f, const std::filesystem::path& base) {
  static constexpr const char* kKinds[] = {"pairs", "graph", "graph_file", "sppairs", "sppairs_file", "brieskorn", "poly"};
  int present = 0;
  for (const char* k : kKinds) present += f.contains(k) ? 1 : 0;
  if (present != 1) throw Error(Errc::io_error, "bench fixture needs exactly one input kind");

  if (f.contains("brieskorn")) {
    const auto& c = f.at("brieskorn");
    std::optional<std::int64_t> n;
    if (f.contains("N")) n = f.at("N").get<std::int64_t>();
    return brieskorn_job({c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>(), c.at(2).get<std::int64_t>()}, n);
  }
  if (!f.contains("N")) throw Error(Errc::io_error, "bench fixture is missing \"N\"");
  const std::int64_t n = f.at("N").get<std::int64_t>();
  if (f.contains("pairs")) return {n, parse_pairs_file(ordered_json{{"pairs", f.at("pairs")}}.dump())};
  if (f.contains("graph")) return {n, parse_graph_file(f.at("graph").dump())};
  if (f.contains("graph_file")) return {n, parse_graph_file(read_text_file(base / f.at("graph_file").get<std::string>()))};
  if (f.contains("sppairs")) return {n, parse_spectral_file(f.at("sppairs").dump())};
  if (f.contains("sppairs_file")) {
    return {n, parse_spectral_file(read_text_file(base / f.at("sppairs_file").get<std::string>()))};
  }
  return {n, PolynomialInput{f.at("poly").get<std::string>()}};
}

}  // namespace

BenchSuite parse_bench_suite(std::string_view text, const std::filesystem::path& base_dir) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::io_error, std::string("malformed bench suite: ") + e.what());
  }
  try {
    BenchSuite suite;
    if (doc.contains("fixtures")) {
      for (const auto& f : doc.at("fixtures")) {
        suite.fixtures.push_back({f.value("name", "fixture" + std::to_string(suite.fixtures.size() + 1)),
                                  fixture_job(f, base_dir)});
      }
    }
    if (doc.contains("counter_scaling")) {
      for (const auto& c : doc.at("counter_scaling")) {
        suite.counter_scaling.emplace_back(c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>(),
                                           c.at(2).get<std::int64_t>());
      }
    }
    return suite;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::io_error, std::string("bad bench suite: ") + e.what());
  }
}

BenchReport run_benchmarks(const BenchSuite& suite) {
  BenchReport report;
  for (const auto& fixture : suite.fixtures) {
    std::vector<EngineTask> tasks;
    try {
      tasks = engine_tasks(fixture.job);
    } catch (const Error& e) {
      report.rows.push_back({fixture.name, "-", std::nullopt, e.what(), 0.0});
      continue;
    }
    for (const auto& task : tasks) {
      BenchRow row;
      row.fixture = fixture.name;
      row.engine = approach_name(task.approach);
      auto start = Clock::now();
      try {
        row.value = task.run({}).value;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.seconds = seconds_since(start);
      report.rows.push_back(std::move(row));
    }
  }
  for (const auto& c : suite.counter_scaling) {
    const std::string name = "counts(" + std::to_string(c.c1) + "," + std::to_string(c.c2) + "," + std::to_string(c.c3) + ")";
    auto start = Clock::now();
    SCounts naive = s_counts_naive(c);
    report.rows.push_back({name, "s_counts_naive", naive.s0 - naive.s1 + naive.s2, "", seconds_since(start)});
    start = Clock::now();
    SCounts fast = s_counts_fast(c);
    report.rows.push_back({name, "s_counts_fast", fast.s0 - fast.s1 + fast.s2, "", seconds_since(start)});
  }
  return report;
}

std::string bench_report_to_json(const BenchReport& report) {
  ordered_json doc;
  doc["rows"] = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json row;
    row["fixture"] = r.fixture;
    row["engine"] = r.engine;
    row["signature"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
    if (!r.error.empty()) row["error"] = r.error;
    row["seconds"] = r.seconds;
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace sigsurf

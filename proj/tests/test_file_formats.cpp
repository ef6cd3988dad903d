#include <doctest.h>

#include <filesystem>

#include "sigsurf/error.hpp"
#include "sigsurf/file_formats.hpp"

using namespace sigsurf;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::cancelled;
}

}  // namespace

TEST_CASE("canonical pairs file round trips") {
  const std::string text = "{\"pairs\":[[3,2],[7,2],[15,2]]}\n";
  PuiseuxPairs p = parse_pairs_file(text);
  REQUIRE(p.size() == 3);
  CHECK(p[2] == PuiseuxPair{15, 2});
  CHECK(format_pairs_file(p) == text);
  CHECK(format_pairs_file(parse_pairs_file(" { \"pairs\" : [ [3, 2] ] } ")) == "{\"pairs\":[[3,2]]}\n");
}

TEST_CASE("canonical graph file round trips") {
  const std::string text =
      "{\"exceptional\":[{\"id\":0,\"m\":10}],\"arrowheads\":[1,2],\"edges\":[[0,1],[0,2]]}\n";
  ResolutionGraph g = parse_graph_file(text);
  CHECK(g.vertex_count() == 3);
  CHECK(format_graph_file(g) == text);
  CHECK(parse_graph_file(format_graph_file(ordinary_point_graph(20))).vertex_count() == 21);
}

TEST_CASE("canonical spectral file round trips") {
  const std::string text =
      "{\"entries\":[{\"alpha\":\"-1/6\",\"w\":1,\"h\":1},{\"alpha\":\"1/6\",\"w\":1,\"h\":1}]}\n";
  SpectralPairs s = parse_spectral_file(text);
  CHECK(s.entries().size() == 2);
  CHECK(format_spectral_file(s) == text);
  SpectralPairs ints = parse_spectral_file("{\"entries\":[{\"alpha\":0,\"w\":1,\"h\":2}]}");
  CHECK(format_spectral_file(ints) == "{\"entries\":[{\"alpha\":\"0\",\"w\":1,\"h\":2}]}\n");
}

TEST_CASE("malformed and invalid files") {
  CHECK(code_of([] { parse_pairs_file("{\"pairs\":[[3,2]"); }) == Errc::io_error);
  CHECK(code_of([] { parse_pairs_file("{\"pair\":[[3,2]]}"); }) == Errc::io_error);
  CHECK(code_of([] { parse_pairs_file("{\"pairs\":[[3,2,1]]}"); }) == Errc::io_error);
  CHECK(code_of([] { parse_pairs_file("{\"pairs\":[[\"3\",2]]}"); }) == Errc::io_error);
  CHECK(code_of([] { parse_pairs_file("{\"pairs\":[[2,3]]}"); }) == Errc::invalid_pairs);
  CHECK(code_of([] { parse_graph_file("{\"exceptional\":[],\"arrowheads\":[],\"edges\":[]}"); }) ==
        Errc::invalid_graph);
  CHECK(code_of([] { parse_graph_file("[1,2]"); }) == Errc::io_error);
  CHECK(code_of([] { parse_spectral_file("{\"entries\":[{\"alpha\":\"1/0\",\"w\":1,\"h\":1}]}"); }) !=
        Errc::cancelled);
  CHECK(code_of([] { parse_spectral_file("{\"entries\":[{\"alpha\":\"1/3\",\"w\":1,\"h\":1}]}"); }) ==
        Errc::invalid_spectrum);
}

TEST_CASE("text files") {
  auto path = std::filesystem::temp_directory_path() / "sigsurf_test_file_formats.json";
  write_text_file(path, "{\"pairs\":[[3,2]]}\n");
  CHECK(parse_pairs_file(read_text_file(path)).size() == 1);
  std::filesystem::remove(path);
  CHECK(code_of([&] { read_text_file(path); }) == Errc::io_error);
}

TEST_CASE("result json") {
  SignatureResult r;
  r.value = -2;
  r.approach = Approach::resolution;
  r.eta_n = Rational(2, 3);
  r.eta_1 = Rational(4, 3);
  std::string j = result_to_json(r, 2);
  CHECK(j.find("\"signature\": -2") != std::string::npos);
  CHECK(j.find("\"2/3\"") != std::string::npos);
  CHECK(j.find("\"resolution\"") != std::string::npos);
}

#include "sigsurf/file_formats.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sigsurf/error.hpp"

namespace sigsurf {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(std::string_view text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::io_error, std::string("malformed ") + what + " file: " + e.what());
  }
}

template <typename F>
auto decode(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::io_error, std::string("bad ") + what + " file: " + e.what());
  }
}

const ordered_json& field(const ordered_json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(Errc::io_error, std::string("bad ") + what + " file: missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::int64_t integer(const ordered_json& v) {
  if (!v.is_number_integer()) throw Error(Errc::io_error, "expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

Rational rational(const ordered_json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  return Rational(integer(v));
}

ordered_json to_json(const SignatureResult& r, std::int64_t n) {
  ordered_json j;
  j["signature"] = r.value;
  j["approach"] = approach_name(r.approach);
  j["N"] = n;
  j["eta_N"] = r.eta_n ? ordered_json(r.eta_n->str()) : ordered_json(nullptr);
  j["eta_1"] = r.eta_1 ? ordered_json(r.eta_1->str()) : ordered_json(nullptr);
  j["wall_time_s"] = std::chrono::duration<double>(r.wall_time).count();
  j["notes"] = r.notes;
  return j;
}

}  // namespace

PuiseuxPairs parse_pairs_file(std::string_view text) {
  ordered_json doc = parse_json(text, "pairs");
  return decode("pairs", [&] {
    std::vector<PuiseuxPair> pairs;
    for (const auto& p : field(doc, "pairs", "pairs")) {
      if (!p.is_array() || p.size() != 2) throw Error(Errc::io_error, "each Puiseux pair must be [m, n]");
      pairs.push_back({integer(p[0]), integer(p[1])});
    }
    return PuiseuxPairs(std::move(pairs));
  });
}

ResolutionGraph parse_graph_file(std::string_view text) {
  ordered_json doc = parse_json(text, "graph");
  return decode("graph", [&] {
    std::vector<ResolutionGraph::Exceptional> vertices;
    for (const auto& v : field(doc, "exceptional", "graph")) {
      vertices.push_back({integer(field(v, "id", "graph")), integer(field(v, "m", "graph"))});
    }
    std::vector<std::int64_t> arrows;
    for (const auto& a : field(doc, "arrowheads", "graph")) arrows.push_back(integer(a));
    std::vector<ResolutionGraph::Edge> edges;
    for (const auto& e : field(doc, "edges", "graph")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::io_error, "each edge must be [id, id]");
      edges.emplace_back(integer(e[0]), integer(e[1]));
    }
    return ResolutionGraph(std::move(vertices), std::move(arrows), std::move(edges));
  });
}

SpectralPairs parse_spectral_file(std::string_view text) {
  ordered_json doc = parse_json(text, "spectral");
  return decode("spectral", [&] {
    std::vector<SpectralEntry> entries;
    for (const auto& e : field(doc, "entries", "spectral")) {
      entries.push_back({rational(field(e, "alpha", "spectral")), static_cast<int>(integer(field(e, "w", "spectral"))),
                         integer(field(e, "h", "spectral"))});
    }
    return SpectralPairs(std::move(entries));
  });
}

std::string format_pairs_file(const PuiseuxPairs& p) {
  ordered_json doc;
  doc["pairs"] = ordered_json::array();
  for (const auto& pair : p.pairs()) doc["pairs"].push_back({pair.m, pair.n});
  return doc.dump() + "\n";
}

std::string format_graph_file(const ResolutionGraph& g) {
  ordered_json doc;
  doc["exceptional"] = ordered_json::array();
  for (const auto& v : g.exceptional()) doc["exceptional"].push_back({{"id", v.id}, {"m", v.m}});
  doc["arrowheads"] = g.arrowheads();
  doc["edges"] = ordered_json::array();
  for (const auto& [a, b] : g.edges()) doc["edges"].push_back({a, b});
  return doc.dump() + "\n";
}

std::string format_spectral_file(const SpectralPairs& s) {
  ordered_json doc;
  doc["entries"] = ordered_json::array();
  for (const auto& e : s.entries()) doc["entries"].push_back({{"alpha", e.alpha.str()}, {"w", e.w}, {"h", e.h}});
  return doc.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

std::string result_to_json(const SignatureResult& r, std::int64_t n) { return to_json(r, n).dump(2) + "\n"; }

std::string report_to_json(const VerificationReport& r, std::int64_t n) {
  ordered_json doc;
  doc["consensus"] = r.consensus;
  doc["signature"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
  doc["engines"] = ordered_json::array();
  for (const auto& e : r.engines) {
    ordered_json row;
    if (e.result) {
      row = to_json(*e.result, n);
    } else {
      row["approach"] = approach_name(e.approach);
      row["error"] = e.error;
    }
    doc["engines"].push_back(row);
  }
  return doc.dump(2) + "\n";
}

}  // namespace sigsurf

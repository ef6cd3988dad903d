#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "sigsurf/curve_invariants.hpp"
#include "sigsurf/portfolio.hpp"
#include "sigsurf/resolution_graph.hpp"
#include "sigsurf/spectral_engine.hpp"

namespace sigsurf {

// JSON input files. Parse failures and schema violations throw
// Errc::io_error (or the domain error of the decoded value); the format_*
// functions emit the canonical single-line form followed by a newline, so
// format(parse(text)) == text for canonical files.
//
//   pairs:    {"pairs":[[3,2],[7,2],[15,2]]}
//   graph:    {"exceptional":[{"id":0,"m":10}],"arrowheads":[1,2],"edges":[[0,1],[0,2]]}
//   spectral: {"entries":[{"alpha":"-1/6","w":1,"h":1},{"alpha":"1/6","w":1,"h":1}]}
//
// Rationals are "p/q" strings ("p" when integral); plain JSON integers are
// accepted for alpha on input.
PuiseuxPairs parse_pairs_file(std::string_view text);
ResolutionGraph parse_graph_file(std::string_view text);
SpectralPairs parse_spectral_file(std::string_view text);

std::string format_pairs_file(const PuiseuxPairs& p);
std::string format_graph_file(const ResolutionGraph& g);
std::string format_spectral_file(const SpectralPairs& s);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Machine-readable results; rationals as "p/q" strings.
std::string result_to_json(const SignatureResult& r, std::int64_t n);
std::string report_to_json(const VerificationReport& r, std::int64_t n);

}  // namespace sigsurf

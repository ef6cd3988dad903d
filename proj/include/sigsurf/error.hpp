#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigsurf {

enum class Errc {
  invalid_argument,
  syntax_error,
  unsupported_variable,
  field_extension_required,
  reducible_curve,
  smooth_branch,
  invalid_pairs,
  invalid_exponents,
  invalid_sequence,
  invalid_graph,
  invalid_spectrum,
  not_coprime,
  overflow,
  io_error,
  non_integer_signature,
  no_applicable_engine,
  all_engines_failed,
  consensus_failure,
  cancelled,
};

const char* errc_name(Errc code);

// Errors caused by malformed user input (exit status 2), as opposed to
// computational failures (exit status 1).
bool is_input_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(Errc::syntax_error,
              "syntax error at column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}

  // Zero-based character offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sigsurf

#pragma once

#include <stop_token>

#include "sigsurf/error.hpp"

namespace sigsurf {

// Engines poll this between outer-loop iterations; a default-constructed
// token never fires.
inline void throw_if_cancelled(const std::stop_token& token) {
  if (token.stop_requested()) throw Error(Errc::cancelled, "computation cancelled");
}

}  // namespace sigsurf

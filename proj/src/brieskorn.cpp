#include "sigsurf/brieskorn.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "sigsurf/cancel.hpp"
#include "sigsurf/error.hpp"

namespace sigsurf {

namespace {

// #{k in [1, hi] : base + k*step < bound}, step > 0.
std::int64_t count_below(std::int64_t base, std::int64_t step, std::int64_t bound, std::int64_t hi) {
  std::int64_t room = bound - base - 1;  // need k*step <= room
  if (room < step) return 0;
  return std::min(hi, room / step);
}

// 1 if some k in [1, hi] has base + k*step == target.
std::int64_t hits(std::int64_t base, std::int64_t step, std::int64_t target, std::int64_t hi) {
  std::int64_t gap = target - base;
  if (gap <= 0 || gap % step != 0) return 0;
  return gap / step <= hi ? 1 : 0;
}

SCounts count_rows(const BrieskornExponents& c, std::int64_t k1_begin, std::int64_t k1_end,
                   const std::stop_token& stop) {
  const std::int64_t d = c.c1 * c.c2 * c.c3;
  const std::int64_t w1 = c.c2 * c.c3;
  const std::int64_t w2 = c.c1 * c.c3;
  const std::int64_t step = c.c1 * c.c2;
  const std::int64_t hi = c.c3 - 1;
  SCounts out;
  for (std::int64_t k1 = k1_begin; k1 < k1_end; ++k1) {
    throw_if_cancelled(stop);
    for (std::int64_t k2 = 1; k2 < c.c2; ++k2) {
      const std::int64_t base = k1 * w1 + k2 * w2;
      const std::int64_t below1 = count_below(base, step, d, hi);
      const std::int64_t below2 = count_below(base, step, 2 * d, hi);
      const std::int64_t at1 = hits(base, step, d, hi);
      const std::int64_t at2 = hits(base, step, 2 * d, hi);
      out.s0 += below1;
      out.s1 += below2 - below1 - at1;
      out.s2 += hi - below2 - at2;
      out.z_integer += at1 + at2;
    }
  }
  return out;
}

}  // namespace

BrieskornExponents::BrieskornExponents(std::int64_t a, std::int64_t b, std::int64_t c) : c1(a), c2(b), c3(c) {
  if (a < 1 || b < 1 || c < 1) throw Error(Errc::invalid_argument, "Brieskorn exponents must be >= 1");
  std::int64_t p;
  if (__builtin_mul_overflow(a, b, &p) || __builtin_mul_overflow(p, c, &p) || p > kMaxBrieskornProduct) {
    throw Error(Errc::overflow, "Brieskorn exponents (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ") are too large");
  }
}

SCounts s_counts_naive(const BrieskornExponents& c, std::stop_token stop) {
  const std::int64_t d = c.c1 * c.c2 * c.c3;
  SCounts out;
  for (std::int64_t k1 = 1; k1 < c.c1; ++k1) {
    throw_if_cancelled(stop);
    for (std::int64_t k2 = 1; k2 < c.c2; ++k2) {
      for (std::int64_t k3 = 1; k3 < c.c3; ++k3) {
        const std::int64_t s = k1 * c.c2 * c.c3 + k2 * c.c1 * c.c3 + k3 * c.c1 * c.c2;
        if (s % d == 0) {
          ++out.z_integer;
        } else if (s < d) {
          ++out.s0;
        } else if (s < 2 * d) {
          ++out.s1;
        } else {
          ++out.s2;
        }
      }
    }
  }
  return out;
}

SCounts s_counts_fast(const BrieskornExponents& c, std::stop_token stop, unsigned threads) {
  const std::int64_t rows = c.c1 - 1;
  if (rows <= 0 || c.c2 < 2 || c.c3 < 2) return {};
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::int64_t>(rows, 64))));
  if (threads == 1) return count_rows(c, 1, c.c1, stop);

  std::vector<SCounts> parts(threads);
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::int64_t begin = 1 + rows * t / threads;
      const std::int64_t end = 1 + rows * (t + 1) / threads;
      pool.emplace_back([&, t, begin, end] {
        try {
          parts[t] = count_rows(c, begin, end, stop);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  SCounts out;
  for (const auto& p : parts) {
    out.s0 += p.s0;
    out.s1 += p.s1;
    out.s2 += p.s2;
    out.z_integer += p.z_integer;
  }
  return out;
}

std::int64_t brieskorn_signature(const BrieskornExponents& c, std::stop_token stop) {
  SCounts s = s_counts_fast(c, std::move(stop));
  return s.s0 - s.s1 + s.s2;
}

}  // namespace sigsurf

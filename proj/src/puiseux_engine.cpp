#include "sigsurf/puiseux_engine.hpp"

#include "sigsurf/cancel.hpp"
#include "sigsurf/error.hpp"
#include "sigsurf/rational.hpp"

namespace sigsurf {

ReductionPlan reduction_plan(const PuiseuxPairs& p, std::int64_t n) {
  if (n < 2) throw Error(Errc::invalid_argument, "N must be >= 2");
  if (p.empty()) {
    throw Error(Errc::smooth_branch, "smooth branch (no Puiseux pairs): the Puiseux approach needs a singular branch");
  }
  const std::size_t l = p.size();
  ReductionPlan plan;
  plan.a.resize(l);
  plan.d.resize(l);
  plan.a[0] = p[0].m;
  for (std::size_t i = 0; i + 1 < l; ++i) {
    std::int64_t inner = checked_add(p[i].m, -checked_mul(p[i].n, plan.a[i]));
    plan.a[i + 1] = checked_add(p[i + 1].m, -checked_mul(p[i + 1].n, inner));
  }
  std::int64_t tail = 1;  // n_{i+1} * ... * n_l
  for (std::size_t i = l; i-- > 0;) {
    plan.d[i] = i + 1 == l ? 1 : gcd(n, tail);
    tail = checked_mul(tail, p[i].n);
  }
  for (std::size_t i = 0; i < l; ++i) plan.summands.emplace_back(plan.a[i], p[i].n, n / plan.d[i]);
  return plan;
}

std::int64_t signature_puiseux(const PuiseuxPairs& p, std::int64_t n, std::stop_token stop) {
  ReductionPlan plan = reduction_plan(p, n);
  std::int64_t sigma = 0;
  for (std::size_t i = 0; i < plan.summands.size(); ++i) {
    throw_if_cancelled(stop);
    sigma = checked_add(sigma, checked_mul(plan.d[i], brieskorn_signature(plan.summands[i], stop)));
  }
  return sigma;
}

}  // namespace sigsurf

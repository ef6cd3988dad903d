#include "sigsurf/portfolio.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <thread>

#include "sigsurf/error.hpp"
#include "sigsurf/newton_puiseux.hpp"
#include "sigsurf/parser.hpp"
#include "sigsurf/puiseux_engine.hpp"
#include "sigsurf/resolution_engine.hpp"

namespace sigsurf {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
SignatureResult timed(Approach a, F&& body) {
  auto start = Clock::now();
  SignatureResult r = body();
  r.approach = a;
  r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

EngineTask puiseux_task(std::shared_ptr<const PuiseuxPairs> p, std::int64_t n) {
  return {Approach::puiseux, [p, n](std::stop_token stop) {
            return timed(Approach::puiseux, [&] {
              SignatureResult r;
              r.value = signature_puiseux(*p, n, stop);
              return r;
            });
          }};
}

EngineTask resolution_task(std::shared_ptr<const ResolutionGraph> g, std::int64_t n) {
  return {Approach::resolution, [g, n](std::stop_token stop) {
            return timed(Approach::resolution, [&] {
              SignatureResult r;
              r.eta_n = eta_resolution(*g, n, stop);
              r.eta_1 = eta_resolution(*g, 1, stop);
              r.value = signature_from_eta(*r.eta_n, *r.eta_1, n);
              return r;
            });
          }};
}

// Converts the pairs to a graph inside the engine so the conversion is timed
// and raced like the rest of the work.
EngineTask resolution_from_pairs_task(std::shared_ptr<const PuiseuxPairs> p, std::int64_t n) {
  return {Approach::resolution, [p, n](std::stop_token stop) {
            return timed(Approach::resolution, [&] {
              ResolutionGraph g = resolution_graph_of(*p);
              SignatureResult r;
              r.eta_n = eta_resolution(g, n, stop);
              r.eta_1 = eta_resolution(g, 1, stop);
              r.value = signature_from_eta(*r.eta_n, *r.eta_1, n);
              r.notes.push_back("graph derived from Puiseux pairs (" + std::to_string(g.exceptional_count()) +
                                " divisors)");
              return r;
            });
          }};
}

EngineTask spectral_task(std::shared_ptr<const SpectralPairs> s, std::int64_t n) {
  return {Approach::spectral, [s, n](std::stop_token stop) {
            return timed(Approach::spectral, [&] {
              SignatureResult r;
              r.eta_n = eta_spectral(*s, n, stop);
              r.eta_1 = eta_spectral(*s, 1, stop);
              r.value = signature_from_eta(*r.eta_n, *r.eta_1, n);
              if (s->has_weight_two()) r.notes.push_back("unverified orientation for weight-2 term");
              return r;
            });
          }};
}

EngineTask brieskorn_task(BrieskornExponents c) {
  return {Approach::brieskorn, [c](std::stop_token stop) {
            return timed(Approach::brieskorn, [&] {
              SignatureResult r;
              r.value = brieskorn_signature(c, stop);
              return r;
            });
          }};
}

bool brieskorn_curve_is_branch(const BrieskornExponents& c) {
  return std::min(c.c1, c.c2) >= 2 && gcd(c.c1, c.c2) == 1;
}

void append_pairs_tasks(std::vector<EngineTask>& tasks, const PuiseuxPairs& pairs, std::int64_t n) {
  if (pairs.empty()) {
    throw Error(Errc::no_applicable_engine, "no engine applies: the branch is smooth (no Puiseux pairs)");
  }
  auto shared = std::make_shared<const PuiseuxPairs>(pairs);
  tasks.push_back(puiseux_task(shared, n));
  tasks.push_back(resolution_from_pairs_task(shared, n));
}

}  // namespace

const char* approach_name(Approach a) {
  switch (a) {
    case Approach::puiseux: return "puiseux";
    case Approach::resolution: return "resolution";
    case Approach::spectral: return "spectral";
    case Approach::brieskorn: return "brieskorn";
  }
  return "unknown";
}

JobSpec brieskorn_job(const BrieskornExponents& c, std::optional<std::int64_t> n) {
  if (n && *n != c.c3) {
    throw Error(Errc::invalid_argument, "-N " + std::to_string(*n) + " conflicts with the z exponent " +
                                            std::to_string(c.c3) + " of the Brieskorn polynomial");
  }
  return JobSpec{c.c3, c};
}

std::vector<EngineTask> engine_tasks(const JobSpec& job) {
  if (job.n < 2) throw Error(Errc::invalid_argument, "N must be >= 2");
  std::vector<EngineTask> tasks;
  const std::int64_t n = job.n;

  if (const auto* pairs = std::get_if<PuiseuxPairs>(&job.input)) {
    append_pairs_tasks(tasks, *pairs, n);
  } else if (const auto* graph = std::get_if<ResolutionGraph>(&job.input)) {
    tasks.push_back(resolution_task(std::make_shared<const ResolutionGraph>(*graph), n));
  } else if (const auto* spectrum = std::get_if<SpectralPairs>(&job.input)) {
    tasks.push_back(spectral_task(std::make_shared<const SpectralPairs>(*spectrum), n));
  } else if (const auto* c = std::get_if<BrieskornExponents>(&job.input)) {
    if (c->c3 != n) throw Error(Errc::invalid_argument, "Brieskorn job needs N equal to c3");
    tasks.push_back(brieskorn_task(*c));
    if (brieskorn_curve_is_branch(*c)) {
      auto pairs = std::make_shared<const PuiseuxPairs>(
          std::vector<PuiseuxPair>{{std::max(c->c1, c->c2), std::min(c->c1, c->c2)}});
      tasks.push_back(puiseux_task(pairs, n));
      tasks.push_back(spectral_task(
          std::make_shared<const SpectralPairs>(brieskorn_curve_spectral_pairs(c->c1, c->c2)), n));
    }
  } else {
    const auto& poly = std::get<PolynomialInput>(job.input);
    BivariatePoly g = parse_polynomial(poly.text);
    PuiseuxPairs pairs;
    try {
      pairs = puiseux_pairs_lite(g);
    } catch (const Error& e) {
      if (is_input_error(e.code())) throw;
      throw Error(Errc::no_applicable_engine, std::string("no engine applies: ") + e.what());
    }
    append_pairs_tasks(tasks, pairs, n);
  }
  if (tasks.empty()) throw Error(Errc::no_applicable_engine, "no engine applies to this input");
  return tasks;
}

std::vector<Approach> applicable_engines(const JobSpec& job) {
  std::vector<Approach> out;
  for (const auto& t : engine_tasks(job)) out.push_back(t.approach);
  return out;
}

RaceOutcome race(std::vector<EngineTask> tasks) {
  if (tasks.empty()) throw Error(Errc::no_applicable_engine, "no engine to race");

  std::mutex mu;
  std::condition_variable cv;
  std::atomic<bool> claimed{false};
  std::optional<SignatureResult> winner;
  std::size_t winner_index = 0;
  std::size_t finished = 0;
  std::vector<std::string> errors(tasks.size());
  std::vector<Clock::time_point> done_at(tasks.size());
  std::stop_source stop;
  Clock::time_point cancel_at;

  {
    std::vector<std::jthread> workers;
    workers.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      workers.emplace_back([&, i] {
        std::optional<SignatureResult> result;
        std::string error;
        try {
          result = tasks[i].run(stop.get_token());
        } catch (const std::exception& e) {
          error = e.what();
        }
        std::lock_guard lock(mu);
        done_at[i] = Clock::now();
        if (result) {
          bool expected = false;
          if (claimed.compare_exchange_strong(expected, true)) {
            winner = std::move(result);
            winner_index = i;
          }
        } else {
          errors[i] = std::move(error);
        }
        ++finished;
        cv.notify_all();
      });
    }

    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return claimed.load() || finished == tasks.size(); });
    cancel_at = Clock::now();
    lock.unlock();
    stop.request_stop();
  }  // joins the losers

  if (!winner) {
    std::string msg = "all engines failed:";
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      msg += std::string(" [") + approach_name(tasks[i].approach) + ": " + errors[i] + "]";
    }
    throw Error(Errc::all_engines_failed, msg);
  }

  RaceOutcome out{std::move(*winner), {}};
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (i == winner_index) continue;
    LoserTiming t{tasks[i].approach};
    t.finished_before_cancel = done_at[i] <= cancel_at;
    if (!t.finished_before_cancel) {
      t.stop_latency = std::chrono::duration_cast<std::chrono::nanoseconds>(done_at[i] - cancel_at);
    }
    out.losers.push_back(t);
  }
  return out;
}

SignatureResult race_signature(const JobSpec& job) { return race(engine_tasks(job)).winner; }

VerificationReport run_all(std::vector<EngineTask> tasks) {
  VerificationReport report;
  report.engines.resize(tasks.size());
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      report.engines[i].approach = tasks[i].approach;
      workers.emplace_back([&, i] {
        try {
          report.engines[i].result = tasks[i].run({});
        } catch (const std::exception& e) {
          report.engines[i].error = e.what();
        }
      });
    }
  }
  report.consensus = !report.engines.empty();
  for (const auto& e : report.engines) {
    if (!e.result) {
      report.consensus = false;
    } else if (!report.value) {
      report.value = e.result->value;
    } else if (*report.value != e.result->value) {
      report.consensus = false;
    }
  }
  if (!report.consensus) report.value.reset();
  return report;
}

void require_consensus(const VerificationReport& report) {
  if (report.consensus) return;
  std::string msg = "engines disagree:";
  for (const auto& e : report.engines) {
    msg += std::string(" ") + approach_name(e.approach) + "=";
    msg += e.result ? std::to_string(e.result->value) : "error(" + e.error + ")";
  }
  throw Error(Errc::consensus_failure, msg);
}

VerificationReport verify_signature(const JobSpec& job) {
  VerificationReport report = run_all(engine_tasks(job));
  require_consensus(report);
  return report;
}

}  // namespace sigsurf

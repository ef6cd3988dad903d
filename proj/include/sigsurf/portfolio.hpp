#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

#include "sigsurf/brieskorn.hpp"
#include "sigsurf/curve_invariants.hpp"
#include "sigsurf/rational.hpp"
#include "sigsurf/resolution_graph.hpp"
#include "sigsurf/spectral_engine.hpp"

namespace sigsurf {

enum class Approach { puiseux, resolution, spectral, brieskorn };

const char* approach_name(Approach a);

struct PolynomialInput {
  std::string text;
};

using JobInput = std::variant<PuiseuxPairs, ResolutionGraph, SpectralPairs, BrieskornExponents, PolynomialInput>;

// sigma(z^N + g) for g described by exactly one input. For Brieskorn input
// (c1, c2, c3) the job is sigma(x^c1 + y^c2 + z^c3), i.e. g = x^c1 + y^c2
// and N = c3.
struct JobSpec {
  std::int64_t n = 2;
  JobInput input;
};

// Builds a Brieskorn job; `n`, when given, must equal c3.
JobSpec brieskorn_job(const BrieskornExponents& c, std::optional<std::int64_t> n = std::nullopt);

struct SignatureResult {
  std::int64_t value = 0;
  Approach approach = Approach::puiseux;
  std::optional<Rational> eta_n;
  std::optional<Rational> eta_1;
  std::chrono::nanoseconds wall_time{0};
  std::vector<std::string> notes;
};

// One engine bound to an immutable copy of its input.
struct EngineTask {
  Approach approach;
  std::function<SignatureResult(std::stop_token)> run;
};

// Throws Errc::no_applicable_engine when nothing applies (for polynomial
// input this includes Newton-Puiseux failures, with the cause in the message).
std::vector<Approach> applicable_engines(const JobSpec& job);
std::vector<EngineTask> engine_tasks(const JobSpec& job);

struct LoserTiming {
  Approach approach;
  bool finished_before_cancel = false;
  // Time from the cancellation request until the engine returned.
  std::chrono::nanoseconds stop_latency{0};
};

struct RaceOutcome {
  SignatureResult winner;
  std::vector<LoserTiming> losers;
};

// Runs all tasks concurrently; the first to finish successfully wins and the
// rest are cancelled cooperatively and joined before returning. Throws
// Errc::all_engines_failed when no task succeeds.
RaceOutcome race(std::vector<EngineTask> tasks);

SignatureResult race_signature(const JobSpec& job);

struct EngineReport {
  Approach approach;
  std::optional<SignatureResult> result;
  std::string error;
};

struct VerificationReport {
  std::vector<EngineReport> engines;
  bool consensus = false;
  std::optional<std::int64_t> value;
};

// Runs every task to completion (concurrently) and records agreement;
// never throws on disagreement.
VerificationReport run_all(std::vector<EngineTask> tasks);

// Throws Errc::consensus_failure naming the engines that failed or disagree.
void require_consensus(const VerificationReport& report);

VerificationReport verify_signature(const JobSpec& job);

}  // namespace sigsurf

#pragma once

// ECP, pure random search, and the known-constant (LIPO) mode of ECP.

#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "ecp/acceptance.hpp"
#include "ecp/core.hpp"

namespace ecp {

template <class F>
concept ObjectiveFunction = std::invocable<F&, std::span<const double>> &&
    std::convertible_to<std::invoke_result_t<F&, std::span<const double>>, double>;

//! One candidate draw inside an ECP round, reported after the growth check and
//! the acceptance test.
struct SampleEvent {
  //! Algorithm round t; the candidate competes to become point t+1.
  std::size_t round;
  std::span<const double> candidate;
  //! Epsilon used for the acceptance test of this candidate.
  double eps;
  bool growth_fired;
  bool accepted;
  //! Counter state after the growth check (before any acceptance reset).
  std::uint64_t count_cur;
  std::uint64_t count_prev;
  std::uint64_t attempts_this_round;
};

struct NoObserver {
  void operator()(const SampleEvent&) const {}
};

//! ECP loop state. Counters mirror the pseudocode's h_{t+1} and h_t.
struct EcpState {
  std::size_t t = 1;
  double eps = 0.0;
  std::uint64_t count_cur = 0;
  std::uint64_t count_prev = 1;
  std::uint64_t growths_this_round = 0;
  std::uint64_t attempts_this_round = 0;
};

//! Maximize `f` over `domain` with exactly `config.budget` evaluations.
//!
//! Every round draws uniform candidates until one lies in the acceptance
//! region. Each draw bumps count_cur; when count_cur - count_prev exceeds
//! c_growth, eps grows by tau and count_cur resets. On acceptance count_prev
//! takes count_cur, count_cur resets, and eps grows by tau.
template <ObjectiveFunction F, class Observer = NoObserver>
Trace ecp_optimize(F&& f, const BoxDomain& domain, const EcpConfig& config,
                   Observer&& observer = {}) {
  config.validate(domain.dim());
  const double tau = config.effective_tau(domain.dim());
  const std::size_t n = config.budget;

  Trace trace;
  trace.algorithm = config.known_constant ? Algorithm::lipo : Algorithm::ecp;
  trace.config = config;
  trace.seed = config.seed;
  trace.records.reserve(n);

  RngStream rng(config.seed);
  History history(domain.dim());

  {
    Point x = uniform_sample(domain, rng);
    const double v = f(std::span<const double>(x));
    history.push(x, v);
    trace.records.push_back({std::move(x), v, 1, config.eps1, 1, 0});
  }

  EcpState s;
  s.eps = config.eps1;
  while (s.t < n) {
    Point x = uniform_sample(domain, rng);
    ++s.count_cur;
    ++s.attempts_this_round;
    if (s.attempts_this_round > config.max_attempts_per_round)
      throw AttemptGuardExceeded("ecp: round " + std::to_string(s.t) + " drew more than " +
                                 std::to_string(config.max_attempts_per_round) +
                                 " candidates");

    bool grew = false;
    if (static_cast<double>(s.count_cur) - static_cast<double>(s.count_prev) >
        config.c_growth) {
      s.eps *= tau;
      s.count_cur = 0;
      ++s.growths_this_round;
      grew = true;
    }

    const bool ok = accepts(x, history, s.eps);
    observer(SampleEvent{s.t, x, s.eps, grew, ok, s.count_cur, s.count_prev,
                         s.attempts_this_round});
    if (!ok)
      continue;

    const double v = f(std::span<const double>(x));
    history.push(x, v);
    trace.records.push_back(
        {std::move(x), v, s.t + 1, s.eps, s.attempts_this_round, s.growths_this_round});
    ++s.t;
    s.count_prev = s.count_cur;
    s.eps *= tau;
    s.count_cur = 0;
    s.growths_this_round = 0;
    s.attempts_this_round = 0;
  }

  trace.best_index = argmax_first(trace.records);
  return trace;
}

//! Pure random search: n independent uniform samples.
template <ObjectiveFunction F>
Trace prs_optimize(F&& f, const BoxDomain& domain, std::size_t n, std::uint64_t seed) {
  detail::require(n >= 1, "prs: budget must be >= 1");
  Trace trace;
  trace.algorithm = Algorithm::prs;
  trace.config.budget = n;
  trace.config.seed = seed;
  trace.seed = seed;
  trace.records.reserve(n);

  RngStream rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Point x = uniform_sample(domain, rng);
    const double v = f(std::span<const double>(x));
    trace.records.push_back({std::move(x), v, i + 1, 0.0, 1, 0});
  }
  trace.best_index = argmax_first(trace.records);
  return trace;
}

//! ECP configuration that reproduces LIPO for a known Lipschitz constant k:
//! eps1 = k and tau = 1, so eps stays at k and growth never changes it.
inline EcpConfig lipo_config(double k, std::size_t budget, std::uint64_t seed) {
  detail::require(std::isfinite(k) && k > 0, "lipo_config: k must be > 0");
  EcpConfig c;
  c.eps1 = k;
  c.tau = 1.0;
  c.known_constant = true;
  c.budget = budget;
  c.seed = seed;
  return c;
}

//==============================================================================
// Uniform entry point

//! Algorithm choice plus its parameters. Budget and seed are supplied per run.
struct OptimizerSpec {
  Algorithm kind = Algorithm::ecp;
  //! ECP parameters (budget and seed overridden per run).
  EcpConfig ecp;
  //! Known Lipschitz constant for LIPO mode.
  double k = 1.0;

  static OptimizerSpec make_ecp(EcpConfig c = {}) { return {Algorithm::ecp, c, 1.0}; }
  static OptimizerSpec make_prs() { return {Algorithm::prs, {}, 1.0}; }
  static OptimizerSpec make_lipo(double k) { return {Algorithm::lipo, {}, k}; }
};

template <ObjectiveFunction F>
Trace optimize(const OptimizerSpec& spec, F&& f, const BoxDomain& domain, std::size_t budget,
               std::uint64_t seed) {
  switch (spec.kind) {
  case Algorithm::prs:
    return prs_optimize(f, domain, budget, seed);
  case Algorithm::lipo:
    return ecp_optimize(f, domain, lipo_config(spec.k, budget, seed));
  case Algorithm::ecp:
    break;
  }
  EcpConfig c = spec.ecp;
  c.budget = budget;
  c.seed = seed;
  return ecp_optimize(f, domain, c);
}

}  // namespace ecp

#pragma once

// Closed-form theory quantities for ECP: rejection-probability bound, growth
// cap, hitting time, and finite-budget regret bound.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>

#include "ecp/core.hpp"

namespace ecp::analysis {

struct BoundInputs {
  std::size_t d = 1;
  //! max f - min f over the domain.
  double delta_range = 0.0;
  //! Lebesgue measure of the domain.
  double volume = 1.0;
  double eps1 = 1e-2;
  double tau = 1.001;
  std::size_t n = 1;
  std::optional<double> k;
  std::optional<double> confidence_delta;
  //! Overrides log(volume) when the volume itself overflows (e.g. 9^1000).
  std::optional<double> log_volume;

  double log_vol() const { return log_volume ? *log_volume : std::log(volume); }

  void validate() const {
    using detail::require;
    require(d >= 1, "BoundInputs: d must be >= 1");
    require(std::isfinite(delta_range) && delta_range >= 0, "BoundInputs: delta_range >= 0");
    require(log_volume ? std::isfinite(*log_volume) : (volume > 0 && std::isfinite(volume)),
            "BoundInputs: volume must be finite and > 0");
    require(std::isfinite(eps1) && eps1 > 0, "BoundInputs: eps1 must be > 0");
    require(std::isfinite(tau) && tau > 1, "BoundInputs: tau must be > 1");
    require(n >= 1, "BoundInputs: n must be >= 1");
    if (k)
      require(std::isfinite(*k) && *k > 0, "BoundInputs: k must be > 0");
    if (confidence_delta)
      require(*confidence_delta > 0 && *confidence_delta < 1,
              "BoundInputs: confidence_delta in (0, 1)");
  }

  static BoundInputs for_domain(const BoxDomain& domain, double delta_range, double eps1,
                                double tau, std::size_t n) {
    BoundInputs in;
    in.d = domain.dim();
    in.delta_range = delta_range;
    in.volume = domain.volume();
    in.log_volume = domain.log_volume();
    in.eps1 = eps1;
    in.tau = tau;
    in.n = n;
    return in;
  }
};

//! log of Gamma(d/2 + 1).
inline double log_gamma_half_d_plus_one(std::size_t d) {
  return std::lgamma(0.5 * static_cast<double>(d) + 1.0);
}

//! log of n (sqrt(pi) Delta)^d / (eps1^d Gamma(d/2+1) lambda(X)) without the
//! tau factors. Requires delta_range > 0.
inline double log_base_ratio(const BoundInputs& in, double count) {
  const double d = static_cast<double>(in.d);
  return std::log(count) + d * (0.5 * std::log(std::numbers::pi) + std::log(in.delta_range)) -
         d * std::log(in.eps1) - log_gamma_half_d_plus_one(in.d) - in.log_vol();
}

//! Unclamped upper bound on the probability of rejecting a candidate in round
//! t after v growths:
//!   t (sqrt(pi) Delta)^d / (eps1^d tau^((t-1)d) tau^(v d) Gamma(d/2+1) lambda(X))
//! May exceed 1.
inline double rejection_prob_bound_raw(const BoundInputs& in, std::size_t t, std::uint64_t v) {
  in.validate();
  detail::require(t >= 1, "rejection_prob_bound: t must be >= 1");
  if (in.delta_range == 0.0)
    return 0.0;
  const double d = static_cast<double>(in.d);
  const double log_b = log_base_ratio(in, static_cast<double>(t)) -
                       (static_cast<double>(t - 1) + static_cast<double>(v)) * d *
                           std::log(in.tau);
  return std::exp(log_b);
}

//! rejection_prob_bound_raw clamped to [0, 1].
inline double rejection_prob_bound(const BoundInputs& in, std::size_t t, std::uint64_t v) {
  return std::min(1.0, rejection_prob_bound_raw(in, t, v));
}

//! Number of growths after which acceptance has probability at least 1/2 in
//! any round t <= n:
//!   ceil( (1/d) log_tau( 2n (sqrt(pi) Delta)^d / (eps1^d Gamma(d/2+1) lambda(X)) ) )
//! clamped below at 0. A constant function (Delta = 0) never rejects, so the
//! cap is 0.
inline std::uint64_t growth_cap(const BoundInputs& in) {
  in.validate();
  if (in.delta_range == 0.0)
    return 0;
  const double d = static_cast<double>(in.d);
  const double x = log_base_ratio(in, 2.0 * static_cast<double>(in.n)) / (d * std::log(in.tau));
  if (x <= 0.0)
    return 0;
  return static_cast<std::uint64_t>(std::ceil(x));
}

//! Upper bound on the first round at which eps reaches k:
//!   max(ceil(log_tau(k / eps1)), 1)
inline std::uint64_t hitting_time_bound(double k, double eps1, double tau) {
  detail::require(std::isfinite(k) && k > 0, "hitting_time_bound: k must be > 0");
  detail::require(std::isfinite(eps1) && eps1 > 0, "hitting_time_bound: eps1 must be > 0");
  detail::require(std::isfinite(tau) && tau > 1, "hitting_time_bound: tau must be > 1");
  const double x = std::ceil(std::log(k / eps1) / std::log(tau));
  return x < 1.0 ? 1 : static_cast<std::uint64_t>(x);
}

//! First round t whose epsilon reached k, read off a trace.
//!
//! Record 1 carries eps_1; record r >= 2 carries the final epsilon of round
//! r - 1. Returns nullopt if k was never reached.
inline std::optional<std::uint64_t> empirical_hitting_time(const Trace& trace, double k) {
  detail::require(std::isfinite(k) && k > 0, "empirical_hitting_time: k must be > 0");
  for (std::size_t i = 0; i < trace.records.size(); ++i)
    if (trace.records[i].eps_at_eval >= k)
      return i == 0 ? 1 : i;
  return std::nullopt;
}

//! With probability >= 1 - delta the regret after n evaluations is at most
//!   diam * i_star^(1/d) * k * (ln(1/delta) / n)^(1/d)
inline double regret_upper_bound(double k, double diam, std::uint64_t i_star, std::size_t n,
                                 double confidence_delta, std::size_t d) {
  using detail::require;
  require(std::isfinite(k) && k > 0, "regret_upper_bound: k must be > 0");
  require(std::isfinite(diam) && diam > 0, "regret_upper_bound: diam must be > 0");
  require(i_star >= 1, "regret_upper_bound: i_star must be >= 1");
  require(n >= 1, "regret_upper_bound: n must be >= 1");
  require(d >= 1, "regret_upper_bound: d must be >= 1");
  require(confidence_delta > 0 && confidence_delta < 1,
          "regret_upper_bound: confidence_delta in (0, 1)");
  const double inv_d = 1.0 / static_cast<double>(d);
  return diam * std::pow(static_cast<double>(i_star), inv_d) * k *
         std::pow(std::log(1.0 / confidence_delta) / static_cast<double>(n), inv_d);
}

}  // namespace ecp::analysis

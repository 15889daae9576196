#pragma once

// Shared domain, configuration, randomness and trace types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecp {

using Point = std::vector<double>;

//==============================================================================
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

//! A single ECP round drew more candidates than `max_attempts_per_round`.
struct AttemptGuardExceeded : Error {
  using Error::Error;
};

//! A recorded value exceeds the supplied ground-truth maximum.
struct GroundTruthError : Error {
  using Error::Error;
};

namespace detail {
inline void require(bool cond, const std::string& what) {
  if (!cond)
    throw InvalidArgument(what);
}
}  // namespace detail

//==============================================================================
// BoxDomain

//! Axis-aligned box [lower, upper] with non-empty interior.
class BoxDomain {
public:
  BoxDomain(std::vector<double> lower, std::vector<double> upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {
    detail::require(!lower_.empty(), "BoxDomain: dimension must be >= 1");
    detail::require(lower_.size() == upper_.size(),
                    "BoxDomain: lower/upper dimension mismatch");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
      detail::require(std::isfinite(lower_[i]) && std::isfinite(upper_[i]),
                      "BoxDomain: bounds must be finite");
      detail::require(lower_[i] < upper_[i],
                      "BoxDomain: lower[i] < upper[i] required");
    }
  }

  //! The cube [lo, hi]^dim.
  static BoxDomain cube(std::size_t dim, double lo, double hi) {
    return {std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
  }

  std::size_t dim() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }

  double width(std::size_t i) const { return upper_[i] - lower_[i]; }

  //! Lebesgue measure. Overflows to +inf in high dimension; see log_volume().
  double volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < dim(); ++i)
      v *= width(i);
    return v;
  }

  double log_volume() const {
    double v = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
      v += std::log(width(i));
    return v;
  }

  //! Euclidean length of the main diagonal.
  double diameter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
      s += width(i) * width(i);
    return std::sqrt(s);
  }

  bool contains(std::span<const double> x) const {
    if (x.size() != dim())
      return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!(x[i] >= lower_[i] && x[i] <= upper_[i]))
        return false;
    return true;
  }

  friend bool operator==(const BoxDomain&, const BoxDomain&) = default;

private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

//==============================================================================
// Randomness

//! SplitMix64 output finalizer (Steele, Lea & Flood). Used to derive
//! independent seeds; never used as the sampling generator itself.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

//! Seed for sub-stream `index` of `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

//! 64-bit FNV-1a; stable across platforms and runs.
constexpr std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

//! Deterministic random stream.
//!
//! Generator identity: std::mt19937_64 (whose output sequence is fixed by the
//! C++ standard) seeded with mix64(seed). Uniform reals take the top 53 bits of
//! one 64-bit draw, so sequences are bit-identical across platforms. Not
//! thread-safe; each run owns its stream.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  //! Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  //! Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    const double x = lo + (hi - lo) * uniform01();
    return x < hi ? x : std::nextafter(hi, lo);
  }

  //! Independent stream for `index`, leaving this stream untouched.
  RngStream split(std::uint64_t index) const {
    return RngStream(derive_seed(seed_, index));
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

//! x ~ U(domain); coordinate i uniform on [lower[i], upper[i]).
inline Point uniform_sample(const BoxDomain& domain, RngStream& rng) {
  Point x(domain.dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = rng.uniform(domain.lower()[i], domain.upper()[i]);
  return x;
}

//==============================================================================
// Configuration

enum class Algorithm { ecp, prs, lipo };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
  case Algorithm::ecp:
    return "ecp";
  case Algorithm::prs:
    return "prs";
  case Algorithm::lipo:
    return "lipo";
  }
  return "?";
}

struct EcpConfig {
  double eps1 = 1e-2;
  //! Fixed growth factor. When empty, tau = max(1 + 1/(n d), tau_floor).
  std::optional<double> tau;
  double tau_floor = 1.001;
  double c_growth = 1e3;
  std::size_t budget = 50;
  std::uint64_t max_attempts_per_round = 10'000'000;
  std::uint64_t seed = 0;
  //! Known-Lipschitz (LIPO) mode: tau == 1 is permitted and eps stays at eps1.
  bool known_constant = false;

  double effective_tau(std::size_t dim) const {
    if (tau)
      return *tau;
    const double rule =
        1.0 + 1.0 / (static_cast<double>(budget) * static_cast<double>(dim));
    return std::max(rule, tau_floor);
  }

  void validate(std::size_t dim) const {
    detail::require(std::isfinite(eps1) && eps1 > 0, "EcpConfig: eps1 must be > 0");
    detail::require(budget >= 1, "EcpConfig: budget must be >= 1");
    detail::require(max_attempts_per_round >= 1,
                    "EcpConfig: max_attempts_per_round must be >= 1");
    detail::require(dim >= 1, "EcpConfig: dimension must be >= 1");
    const double t = effective_tau(dim);
    if (known_constant) {
      detail::require(t >= 1.0 && std::isfinite(t), "EcpConfig: tau must be >= 1");
    } else {
      detail::require(c_growth >= 1.0 && std::isfinite(c_growth),
                      "EcpConfig: c_growth must be >= 1");
      detail::require(t > 1.0 && std::isfinite(t), "EcpConfig: tau must be > 1");
    }
  }
};

//==============================================================================
// Trace

struct EvalRecord {
  Point point;
  double value = 0.0;
  //! 1-based evaluation index. Record r >= 2 was accepted in algorithm round r-1.
  std::size_t round = 1;
  //! Epsilon in force when the point was accepted (0 for PRS).
  double eps_at_eval = 0.0;
  //! Candidates drawn for this record, including the accepted one.
  std::uint64_t attempts = 1;
  //! Growth-condition firings during this round.
  std::uint64_t growths = 0;

  friend bool operator==(const EvalRecord&, const EvalRecord&) = default;
};

struct Trace {
  Algorithm algorithm = Algorithm::ecp;
  EcpConfig config;
  std::uint64_t seed = 0;
  std::vector<EvalRecord> records;
  std::size_t best_index = 0;

  const EvalRecord& best() const { return records.at(best_index); }
  double best_value() const { return best().value; }

  std::uint64_t total_samples() const {
    std::uint64_t s = 0;
    for (const auto& r : records)
      s += r.attempts;
    return s;
  }

  //! max_{i <= t} value_i for t = 1..n.
  std::vector<double> best_so_far() const {
    std::vector<double> out;
    out.reserve(records.size());
    double b = -std::numeric_limits<double>::infinity();
    for (const auto& r : records) {
      b = std::max(b, r.value);
      out.push_back(b);
    }
    return out;
  }

  friend bool operator==(const Trace& a, const Trace& b) {
    return a.algorithm == b.algorithm && a.seed == b.seed &&
           a.best_index == b.best_index && a.records == b.records;
  }
};

//! First index of the maximum value.
inline std::size_t argmax_first(const std::vector<EvalRecord>& records) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < records.size(); ++i)
    if (records[i].value > records[best].value)
      best = i;
  return best;
}

//! Slack allowed between recorded values and the supplied true maximum.
inline constexpr double kGroundTruthTolerance = 1e-9;

//! true_max - best recorded value. Throws GroundTruthError when a recorded
//! value exceeds true_max by more than kGroundTruthTolerance; smaller excesses
//! clamp to zero.
inline double regret(const Trace& trace, double true_max) {
  detail::require(!trace.records.empty(), "regret: empty trace");
  const double best = trace.best_value();
  if (best > true_max + kGroundTruthTolerance * std::max(1.0, std::abs(true_max)))
    throw GroundTruthError("regret: recorded value " + std::to_string(best) +
                           " exceeds supplied maximum " + std::to_string(true_max));
  return std::max(0.0, true_max - best);
}

//! Regret after each prefix length t = 1..n.
inline std::vector<double> regret_curve(const Trace& trace, double true_max) {
  (void)regret(trace, true_max);
  auto curve = trace.best_so_far();
  for (auto& v : curve)
    v = std::max(0.0, true_max - v);
  return curve;
}

}  // namespace ecp

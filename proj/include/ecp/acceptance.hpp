#pragma once

// Acceptance predicate over the evaluation history.
//
// A candidate x is accepted at level eps when
//
//   min_i ( f(x_i) + eps * ||x - x_i||_2 )  >=  max_j f(x_j)
//
// i.e. when some eps-Lipschitz function consistent with the observations could
// exceed the best value seen so far at x. Ties are accepted.

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "ecp/core.hpp"

namespace ecp {

//! Evaluated points and values with a cached maximum.
class History {
public:
  History() = default;

  explicit History(std::size_t dim) : dim_(dim) {}

  void push(std::span<const double> x, double value) {
    if (points_.empty() && dim_ == 0)
      dim_ = x.size();
    detail::require(x.size() == dim_, "History: dimension mismatch");
    points_.emplace_back(x.begin(), x.end());
    values_.push_back(value);
    if (values_.size() == 1 || value > best_)
      best_ = value;
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& values() const { return values_; }
  double best_value() const { return best_; }

  //! The first `n` entries.
  History prefix(std::size_t n) const {
    History h(dim_);
    for (std::size_t i = 0; i < n && i < size(); ++i)
      h.push(points_[i], values_[i]);
    return h;
  }

private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  std::vector<double> values_;
  double best_ = -std::numeric_limits<double>::infinity();
};

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

namespace detail {
inline void check_query(std::span<const double> x, const History& history, double eps) {
  require(!history.empty(), "acceptance: empty history");
  require(x.size() == history.dim(), "acceptance: dimension mismatch");
  require(eps > 0, "acceptance: eps must be > 0");
}
}  // namespace detail

//! min_i values[i] + eps * ||x - points[i]||_2
inline double min_upper_envelope(std::span<const double> x, const History& history,
                                 double eps) {
  detail::check_query(x, history, eps);
  double env = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < history.size(); ++i)
    env = std::min(env, history.values()[i] +
                            eps * euclidean_distance(x, history.points()[i]));
  return env;
}

inline bool accepts(std::span<const double> x, const History& history, double eps) {
  detail::check_query(x, history, eps);
  const double best = history.best_value();
  // Early exit on the first term that falls below the best value.
  for (std::size_t i = 0; i < history.size(); ++i)
    if (history.values()[i] + eps * euclidean_distance(x, history.points()[i]) < best)
      return false;
  return true;
}

}  // namespace ecp

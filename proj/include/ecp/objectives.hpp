#pragma once

// Synthetic benchmark objectives in maximization form (f = -f_min for the usual
// minimization definitions).
//
// Default domains: boxes marked "calibrated" below were chosen so that
// 50-sample random search lands on reference mean values; the rest use the
// usual literature box.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecp/core.hpp"

namespace ecp {

struct UnknownObjective : Error {
  using Error::Error;
};

struct UnsupportedDimension : Error {
  using Error::Error;
};

//! Named black-box function with metadata.
struct Objective {
  using Fn = std::function<double(std::span<const double>)>;

  std::string name;
  std::size_t dim = 0;
  BoxDomain default_domain = BoxDomain::cube(1, 0.0, 1.0);
  Fn evaluate;
  std::optional<double> known_max;
  //! Upper bound on the Lipschitz constant over the default domain.
  std::optional<double> known_lipschitz;

  double operator()(std::span<const double> x) const {
    detail::require(x.size() == dim, "Objective '" + name + "': dimension mismatch");
    return evaluate(x);
  }
};

namespace functions {

using std::numbers::e;
using std::numbers::pi;

inline double sq(double x) { return x * x; }

inline double ackley(std::span<const double> x) {
  const double d = static_cast<double>(x.size());
  double s2 = 0.0, sc = 0.0;
  for (double xi : x) {
    s2 += xi * xi;
    sc += std::cos(2.0 * pi * xi);
  }
  return (20.0 * std::exp(-0.2 * std::sqrt(s2 / d)) - 20.0) + (std::exp(sc / d) - e);
}

inline double bukin6(std::span<const double> x) {
  return -(100.0 * std::sqrt(std::abs(x[1] - 0.01 * x[0] * x[0])) +
           0.01 * std::abs(x[0] + 10.0));
}

//! Six-hump camel.
inline double camel(std::span<const double> x) {
  const double a = x[0], b = x[1];
  const double a2 = a * a, b2 = b * b;
  return -((4.0 - 2.1 * a2 + a2 * a2 / 3.0) * a2 + a * b + (-4.0 + 4.0 * b2) * b2);
}

inline double colville(std::span<const double> x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  return -(100.0 * sq(x1 * x1 - x2) + sq(x1 - 1.0) + sq(x3 - 1.0) + 90.0 * sq(x3 * x3 - x4) +
           10.1 * (sq(x2 - 1.0) + sq(x4 - 1.0)) + 19.8 * (x2 - 1.0) * (x4 - 1.0));
}

inline double cross_in_tray(std::span<const double> x) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
  const double inner = std::abs(std::sin(x[0]) * std::sin(x[1]) *
                                std::exp(std::abs(100.0 - r / pi)));
  return 1e-4 * std::pow(inner + 1.0, 0.1);
}

// sin(pi u) / (pi u), continuous at 0.
inline double sinc_pi(double u) {
  if (u == 0.0)
    return 1.0;
  return std::sin(pi * u) / (pi * u);
}

inline double damavandi(std::span<const double> x) {
  const double s = std::abs(sinc_pi(x[0] - 2.0) * sinc_pi(x[1] - 2.0));
  return -((1.0 - std::pow(s, 5.0)) * (2.0 + sq(x[0] - 7.0) + 2.0 * sq(x[1] - 7.0)));
}

inline double drop_wave(std::span<const double> x) {
  const double r2 = x[0] * x[0] + x[1] * x[1];
  return (1.0 + std::cos(12.0 * std::sqrt(r2))) / (0.5 * r2 + 2.0);
}

inline double easom(std::span<const double> x) {
  return std::cos(x[0]) * std::cos(x[1]) *
         std::exp(-(sq(x[0] - pi) + sq(x[1] - pi)));
}

inline double eggholder(std::span<const double> x) {
  const double a = x[0], b = x[1];
  return (b + 47.0) * std::sin(std::sqrt(std::abs(b + a / 2.0 + 47.0))) +
         a * std::sin(std::sqrt(std::abs(a - (b + 47.0))));
}

inline double griewank(std::span<const double> x) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return -(1.0 + s / 4000.0 - p);
}

namespace hartmann_data {
inline constexpr std::array<double, 4> alpha{1.0, 1.2, 3.0, 3.2};
inline constexpr std::array<std::array<double, 3>, 4> a3{{
    {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}}};
inline constexpr std::array<std::array<double, 3>, 4> p3{{
    {0.3689, 0.1170, 0.2673},
    {0.4699, 0.4387, 0.7470},
    {0.1091, 0.8732, 0.5547},
    {0.0381, 0.5743, 0.8828}}};
inline constexpr std::array<std::array<double, 6>, 4> a6{{
    {10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
    {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
    {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
    {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
inline constexpr std::array<std::array<double, 6>, 4> p6{{
    {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
    {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
    {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
    {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};
}  // namespace hartmann_data

template <std::size_t D>
double hartmann_impl(std::span<const double> x,
                     const std::array<std::array<double, D>, 4>& a,
                     const std::array<std::array<double, D>, 4>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < D; ++j)
      inner += a[i][j] * sq(x[j] - p[i][j]);
    s += hartmann_data::alpha[i] * std::exp(-inner);
  }
  return s;
}

inline double hartmann3(std::span<const double> x) {
  return hartmann_impl<3>(x, hartmann_data::a3, hartmann_data::p3);
}

inline double hartmann6(std::span<const double> x) {
  return hartmann_impl<6>(x, hartmann_data::a6, hartmann_data::p6);
}

inline double himmelblau(std::span<const double> x) {
  return -(sq(x[0] * x[0] + x[1] - 11.0) + sq(x[0] + x[1] * x[1] - 7.0));
}

inline double holder_table(std::span<const double> x) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
  return std::abs(std::sin(x[0]) * std::cos(x[1]) * std::exp(std::abs(1.0 - r / pi)));
}

inline double langermann(std::span<const double> x) {
  static constexpr std::array<std::array<double, 2>, 5> a{
      {{3.0, 5.0}, {5.0, 2.0}, {2.0, 1.0}, {1.0, 4.0}, {7.0, 9.0}}};
  static constexpr std::array<double, 5> c{1.0, 2.0, 5.0, 2.0, 3.0};
  double s = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    const double r = sq(x[0] - a[i][0]) + sq(x[1] - a[i][1]);
    s += c[i] * std::exp(-r / pi) * std::cos(pi * r);
  }
  return -s;
}

//! Levy N.13.
inline double levy13(std::span<const double> x) {
  const double a = x[0], b = x[1];
  return -(sq(std::sin(3.0 * pi * a)) + sq(a - 1.0) * (1.0 + sq(std::sin(3.0 * pi * b))) +
           sq(b - 1.0) * (1.0 + sq(std::sin(2.0 * pi * b))));
}

inline double michalewicz(std::span<const double> x) {
  constexpr int m = 10;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += std::sin(x[i]) *
         std::pow(std::sin(static_cast<double>(i + 1) * x[i] * x[i] / pi), 2 * m);
  return s;
}

//! Perm 0,d,beta with beta = 10; optimum at x_j = 1/j.
inline double perm0(std::span<const double> x) {
  constexpr double beta = 10.0;
  const std::size_t d = x.size();
  double outer = 0.0;
  for (std::size_t i = 1; i <= d; ++i) {
    double inner = 0.0;
    for (std::size_t j = 1; j <= d; ++j) {
      const double jd = static_cast<double>(j);
      inner += (jd + beta) * (std::pow(x[j - 1], static_cast<double>(i)) -
                              1.0 / std::pow(jd, static_cast<double>(i)));
    }
    outer += inner * inner;
  }
  return -outer;
}

inline double powell(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 3 < x.size(); i += 4) {
    const double a = x[i], b = x[i + 1], c = x[i + 2], d = x[i + 3];
    s += sq(a + 10.0 * b) + 5.0 * sq(c - d) + std::pow(b - 2.0 * c, 4) +
         10.0 * std::pow(a - d, 4);
  }
  return -s;
}

inline double rastrigin(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double xi : x)
    s += xi * xi - 10.0 * std::cos(2.0 * pi * xi);
  return -s;
}

inline double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
  return -s;
}

//! Schaffer N.2.
inline double schaffer2(std::span<const double> x) {
  const double a2 = x[0] * x[0], b2 = x[1] * x[1];
  return -(0.5 + (sq(std::sin(a2 - b2)) - 0.5) / sq(1.0 + 0.001 * (a2 + b2)));
}

inline double shubert(std::span<const double> x) {
  double p = 1.0;
  for (std::size_t k = 0; k < 2; ++k) {
    double s = 0.0;
    for (int i = 1; i <= 5; ++i)
      s += i * std::cos((i + 1) * x[k] + i);
    p *= s;
  }
  return -p;
}

//! -||x - 0.3||_2; 1-Lipschitz with maximum 0. Used by the theory checks.
inline double vee(std::span<const double> x) {
  double s = 0.0;
  for (double xi : x)
    s += sq(xi - 0.3);
  return -std::sqrt(s);
}

}  // namespace functions

namespace detail {

inline std::string normalize_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ')
      continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

struct RegistryEntry {
  std::string_view name;
  std::vector<std::string_view> aliases;
  //! Fixed dimension, or 0 when parameterized.
  std::size_t fixed_dim;
  std::function<bool(std::size_t)> dim_ok;
  std::function<BoxDomain(std::size_t)> domain;
  Objective::Fn fn;
  std::optional<double> known_max;
  std::function<std::optional<double>(std::size_t)> lipschitz;
};

inline std::optional<double> no_lipschitz(std::size_t) { return std::nullopt; }

inline const std::vector<RegistryEntry>& registry() {
  using namespace functions;
  auto fixed = [](std::size_t d) { return [d](std::size_t k) { return k == d; }; };
  auto any = [](std::size_t k) { return k >= 1; };
  auto cube = [](double lo, double hi) {
    return [lo, hi](std::size_t d) { return BoxDomain::cube(d, lo, hi); };
  };
  static const std::vector<RegistryEntry> entries{
      // calibrated
      {"ackley", {}, 0, any, cube(-10.0, 10.0), ackley, 0.0,
       [](std::size_t d) -> std::optional<double> {
         return (4.0 + 2.0 * pi * e) / std::sqrt(static_cast<double>(d));
       }},
      {"bukin", {"bukin6"}, 2, fixed(2),
       [](std::size_t) { return BoxDomain({-15.0, -3.0}, {-5.0, 3.0}); }, bukin6, 0.0,
       no_lipschitz},
      // calibrated
      {"camel", {"sixhumpcamel", "camel6"}, 2, fixed(2),
       [](std::size_t) { return BoxDomain({-2.0, -1.0}, {2.0, 1.0}); }, camel,
       1.0316284534898774,
       [](std::size_t) -> std::optional<double> {
         // |d/dx1| <= 16 + 8.4*8 + 2*32 + 1, |d/dx2| <= 2 + 8 + 16
         return std::hypot(16.0 + 67.2 + 64.0 + 1.0, 26.0);
       }},
      {"colville", {}, 4, fixed(4), cube(-10.0, 10.0), colville, 0.0, no_lipschitz},
      {"crossintray", {"cross"}, 2, fixed(2), cube(-10.0, 10.0), cross_in_tray,
       2.0626118708227397, no_lipschitz},
      {"damavandi", {}, 2, fixed(2), cube(0.0, 14.0), damavandi, 0.0, no_lipschitz},
      // calibrated
      {"dropwave", {}, 2, fixed(2), cube(-4.0, 4.0), drop_wave, 1.0, no_lipschitz},
      // calibrated
      {"easom", {}, 2, fixed(2), cube(-20.0, 20.0), easom, 1.0, no_lipschitz},
      {"eggholder", {}, 2, fixed(2), cube(-512.0, 512.0), eggholder, 959.6406627208506,
       no_lipschitz},
      // calibrated
      {"griewank", {}, 0, any, cube(-50.0, 50.0), griewank, 0.0,
       [](std::size_t d) -> std::optional<double> {
         double s = 0.0;
         for (std::size_t i = 1; i <= d; ++i)
           s += sq(50.0 / 2000.0 + 1.0 / std::sqrt(static_cast<double>(i)));
         return std::sqrt(s);
       }},
      {"hartmann3", {}, 3, fixed(3), cube(0.0, 1.0), hartmann3, 3.8627797869493365,
       no_lipschitz},
      {"hartmann6", {}, 6, fixed(6), cube(0.0, 1.0), hartmann6, 3.3223680113913385,
       no_lipschitz},
      // calibrated
      {"himmelblau", {}, 2, fixed(2), cube(-4.0, 4.0), himmelblau, 0.0,
       [](std::size_t) -> std::optional<double> {
         // each partial <= 4*4*15 + 2*13 on [-4, 4]^2
         return std::sqrt(2.0) * 266.0;
       }},
      {"holder", {"holdertable"}, 2, fixed(2), cube(-10.0, 10.0), holder_table,
       19.208502567886743, no_lipschitz},
      {"langermann", {}, 2, fixed(2), cube(0.0, 10.0), langermann, 4.1558092918477865,
       no_lipschitz},
      // Levy N.13, calibrated
      {"levy", {"levy13"}, 2, fixed(2), cube(-10.0, 10.0), levy13, 0.0, no_lipschitz},
      // calibrated
      {"michalewicz", {}, 2, fixed(2), cube(0.0, 4.0), michalewicz, 1.8013034100985537,
       no_lipschitz},
      {"perm", {"perm0"}, 0, any,
       [](std::size_t d) {
         const double r = static_cast<double>(d);
         return BoxDomain::cube(d, -r, r);
       },
       perm0, 0.0, no_lipschitz},
      {"powell", {}, 0, [](std::size_t k) { return k >= 4 && k % 4 == 0; },
       cube(-4.0, 5.0), powell, 0.0, no_lipschitz},
      // calibrated
      {"rastrigin", {}, 0, any, cube(-4.5, 4.5), rastrigin, 0.0,
       [](std::size_t d) -> std::optional<double> {
         return std::sqrt(static_cast<double>(d)) * (2.0 * 4.5 + 20.0 * pi);
       }},
      {"rosenbrock", {}, 0, [](std::size_t k) { return k >= 2; }, cube(-5.0, 10.0),
       rosenbrock, 0.0, no_lipschitz},
      // calibrated
      {"schaffer", {"schaffer2"}, 2, fixed(2), cube(-5.0, 5.0), schaffer2, 0.0,
       no_lipschitz},
      {"schubert", {"shubert"}, 2, fixed(2), cube(-10.0, 10.0), shubert,
       186.73090883102375, no_lipschitz},
      {"vee", {}, 0, any, cube(0.0, 1.0), vee, 0.0,
       [](std::size_t) -> std::optional<double> { return 1.0; }},
  };
  return entries;
}

inline const RegistryEntry* find_entry(std::string_view name) {
  const std::string key = normalize_name(name);
  for (const auto& e : registry()) {
    if (e.name == key)
      return &e;
    for (auto a : e.aliases)
      if (a == key)
        return &e;
  }
  return nullptr;
}

}  // namespace detail

//! Names of all builtin objectives.
inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::registry())
    out.emplace_back(e.name);
  return out;
}

//! Default dimension for `name` (its fixed dimension, or 2 when parameterized,
//! 4 for powell).
inline std::size_t builtin_default_dim(std::string_view name) {
  const auto* e = detail::find_entry(name);
  if (!e)
    throw UnknownObjective("unknown objective '" + std::string(name) + "'");
  if (e->fixed_dim)
    return e->fixed_dim;
  return e->dim_ok(2) ? 2 : 4;
}

//! Builtin objective by name. `dim == 0` selects builtin_default_dim(name).
inline Objective builtin(std::string_view name, std::size_t dim = 0) {
  const auto* e = detail::find_entry(name);
  if (!e)
    throw UnknownObjective("unknown objective '" + std::string(name) + "'");
  if (dim == 0)
    dim = builtin_default_dim(name);
  if (!e->dim_ok(dim))
    throw UnsupportedDimension("objective '" + std::string(e->name) +
                               "' does not support dimension " + std::to_string(dim));
  Objective obj;
  obj.name = std::string(e->name);
  obj.dim = dim;
  obj.default_domain = e->domain(dim);
  obj.evaluate = e->fn;
  obj.known_max = e->known_max;
  obj.known_lipschitz = e->lipschitz(dim);
  return obj;
}

}  // namespace ecp

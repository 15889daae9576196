#pragma once

// Benchmark harness: fixed budget, repeated seeded runs, mean/std tables with
// Top-1 counts, per-problem rankings, and parameter sweeps.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ecp/core.hpp"
#include "ecp/external.hpp"
#include "ecp/objectives.hpp"
#include "ecp/optimizers.hpp"
#include "json.hpp"

namespace ecp::bench {

//==============================================================================
// Experiment description

struct ProblemSpec {
  std::string name;
  //! 0 selects the builtin default dimension.
  std::size_t dim = 0;
  std::optional<BoxDomain> domain;
  //! When set, the problem is an external objective started from this command.
  std::optional<std::string> command;
  std::chrono::milliseconds timeout = kDefaultExternalTimeout;

  Objective make_objective() const {
    if (command) {
      ecp::detail::require(domain.has_value(), "external problem '" + name + "' needs a domain");
      return external(*command, domain->dim(), *domain, timeout, name);
    }
    return builtin(name, dim);
  }
};

struct AlgorithmSpec {
  OptimizerSpec optimizer;
  //! Sweep coordinates, empty outside a sweep.
  std::string sweep_point;

  std::string label() const { return std::string(to_string(optimizer.kind)); }
  std::string tag() const {
    std::ostringstream os;
    os << label();
    if (optimizer.kind == Algorithm::lipo)
      os << "(k=" << optimizer.k << ")";
    if (!sweep_point.empty())
      os << "[" << sweep_point << "]";
    return os.str();
  }
};

struct SweepGrid {
  std::vector<double> eps1;
  std::vector<double> tau_floor;
  std::vector<double> c_growth;

  bool empty() const { return eps1.empty() && tau_floor.empty() && c_growth.empty(); }
};

struct ExperimentSpec {
  std::vector<ProblemSpec> problems;
  std::vector<AlgorithmSpec> algorithms;
  std::size_t budget = 50;
  std::size_t repetitions = 100;
  std::uint64_t base_seed = 0;
  std::string output;
  std::optional<SweepGrid> sweep;
  //! 0 selects std::thread::hardware_concurrency().
  std::size_t workers = 0;

  void validate() const {
    ecp::detail::require(!problems.empty(), "experiment: no problems");
    ecp::detail::require(!algorithms.empty(), "experiment: no algorithms");
    ecp::detail::require(budget >= 1, "experiment: budget must be >= 1");
    ecp::detail::require(repetitions >= 1, "experiment: repetitions must be >= 1");
    for (const auto& p : problems) {
      if (p.command)
        continue;
      (void)builtin(p.name, p.dim);
      if (p.domain)
        ecp::detail::require(p.domain->dim() == builtin(p.name, p.dim).dim,
                        "experiment: domain override dimension mismatch for '" + p.name + "'");
    }
  }
};

inline std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

//! ECP algorithms expanded over the sweep grid; other algorithms unchanged.
inline std::vector<AlgorithmSpec> expand_sweep(const std::vector<AlgorithmSpec>& algos,
                                               const std::optional<SweepGrid>& sweep) {
  if (!sweep || sweep->empty())
    return algos;
  std::vector<AlgorithmSpec> out;
  for (const auto& a : algos) {
    if (a.optimizer.kind != Algorithm::ecp) {
      out.push_back(a);
      continue;
    }
    const auto& base = a.optimizer.ecp;
    auto or_base = [](const std::vector<double>& v, double b) {
      return v.empty() ? std::vector<double>{b} : v;
    };
    for (double e1 : or_base(sweep->eps1, base.eps1))
      for (double tf : or_base(sweep->tau_floor, base.tau_floor))
        for (double c : or_base(sweep->c_growth, base.c_growth)) {
          AlgorithmSpec s = a;
          s.optimizer.ecp.eps1 = e1;
          s.optimizer.ecp.tau_floor = tf;
          s.optimizer.ecp.c_growth = c;
          s.sweep_point = "eps1=" + format_number(e1) + ";tau_floor=" + format_number(tf) +
                          ";c_growth=" + format_number(c);
          out.push_back(std::move(s));
        }
  }
  return out;
}

//==============================================================================
// Results

struct CellResult {
  std::string problem;
  std::size_t dim = 0;
  std::string algorithm;
  std::string algorithm_tag;
  std::string sweep_point;
  std::size_t budget = 0;
  std::size_t reps = 0;
  std::vector<double> per_rep_best;
  std::vector<std::uint64_t> per_rep_seed;
  double mean_best = 0.0;
  double std_best = 0.0;
  //! Present when the problem has a known maximum on its default domain.
  std::optional<double> mean_regret;
  double mean_wall_ms = 0.0;
  double mean_samples = 0.0;
  //! First error message if any repetition failed; the cell is then nan.
  std::string error;

  bool failed() const { return !error.empty(); }
};

struct BenchResult {
  std::vector<CellResult> cells;

  bool any_nan() const {
    return std::any_of(cells.begin(), cells.end(), [](const CellResult& c) {
      return c.failed() || std::isnan(c.mean_best);
    });
  }
};

//! Equality of everything except wall-clock time.
inline bool same_outcome(const BenchResult& a, const BenchResult& b) {
  if (a.cells.size() != b.cells.size())
    return false;
  auto same_double = [](double x, double y) {
    return (std::isnan(x) && std::isnan(y)) || x == y;
  };
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto& x = a.cells[i];
    const auto& y = b.cells[i];
    if (x.problem != y.problem || x.algorithm_tag != y.algorithm_tag ||
        x.per_rep_seed != y.per_rep_seed || x.per_rep_best.size() != y.per_rep_best.size() ||
        !same_double(x.mean_best, y.mean_best) || !same_double(x.std_best, y.std_best) ||
        x.mean_samples != y.mean_samples || x.mean_regret.has_value() != y.mean_regret.has_value())
      return false;
    for (std::size_t r = 0; r < x.per_rep_best.size(); ++r)
      if (!same_double(x.per_rep_best[r], y.per_rep_best[r]))
        return false;
    if (x.mean_regret && !same_double(*x.mean_regret, *y.mean_regret))
      return false;
  }
  return true;
}

//! Sample mean and standard deviation with the (R - 1) divisor; std is 0 for R = 1.
inline std::pair<double, double> mean_std(const std::vector<double>& v) {
  if (v.empty())
    return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  double m = 0.0;
  for (double x : v)
    m += x;
  m /= static_cast<double>(v.size());
  if (v.size() == 1)
    return {m, 0.0};
  double ss = 0.0;
  for (double x : v)
    ss += (x - m) * (x - m);
  return {m, std::sqrt(ss / static_cast<double>(v.size() - 1))};
}

//! Per-repetition seed: mix of base seed, problem key, algorithm tag and rep.
inline std::uint64_t rep_seed(std::uint64_t base_seed, std::string_view problem_key,
                              std::string_view algorithm_tag, std::uint64_t rep) {
  std::uint64_t h = mix64(base_seed);
  h = mix64(h ^ stable_hash(problem_key));
  h = mix64(h ^ stable_hash(algorithm_tag));
  return mix64(h ^ rep);
}

inline std::string problem_key(const ProblemSpec& p, std::size_t dim) {
  return p.name + "/" + std::to_string(dim);
}

//==============================================================================
// Execution

namespace impl {
struct RepOutcome {
  double best = std::numeric_limits<double>::quiet_NaN();
  double wall_ms = 0.0;
  double samples = 0.0;
  std::uint64_t seed = 0;
  std::string error;
};
}  // namespace impl

//! Run every (problem, algorithm, repetition). Repetitions run on `workers`
//! threads; each worker owns its objective instances (and thus its own child
//! process for external problems). Output order is independent of scheduling.
inline BenchResult run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const auto algos = expand_sweep(spec.algorithms, spec.sweep);

  // Resolve dimensions and domains once.
  struct ProblemInfo {
    std::size_t dim;
    BoxDomain domain;
    std::optional<double> known_max;
  };
  std::vector<ProblemInfo> info;
  for (const auto& p : spec.problems) {
    if (p.command) {
      info.push_back({p.domain->dim(), *p.domain, std::nullopt});
      continue;
    }
    Objective o = builtin(p.name, p.dim);
    info.push_back({o.dim, p.domain.value_or(o.default_domain),
                    p.domain ? std::nullopt : o.known_max});
  }

  const std::size_t n_cells = spec.problems.size() * algos.size();
  const std::size_t n_tasks = n_cells * spec.repetitions;
  std::vector<impl::RepOutcome> outcomes(n_tasks);

  std::size_t workers = spec.workers ? spec.workers : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, std::min(workers, n_tasks));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::map<std::size_t, Objective> objectives;
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= n_tasks)
        return;
      const std::size_t cell = task / spec.repetitions;
      const std::size_t rep = task % spec.repetitions;
      const std::size_t pi = cell / algos.size();
      const std::size_t ai = cell % algos.size();
      const auto& p = spec.problems[pi];
      const auto& a = algos[ai];
      auto& out = outcomes[task];
      out.seed = rep_seed(spec.base_seed, problem_key(p, info[pi].dim), a.tag(), rep);
      try {
        auto it = objectives.find(pi);
        if (it == objectives.end())
          it = objectives.emplace(pi, p.make_objective()).first;
        const Objective& obj = it->second;
        const auto t0 = std::chrono::steady_clock::now();
        Trace trace = optimize(a.optimizer, obj, info[pi].domain, spec.budget, out.seed);
        const auto t1 = std::chrono::steady_clock::now();
        out.best = trace.best_value();
        out.samples = static_cast<double>(trace.total_samples());
        out.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      } catch (const std::exception& e) {
        out.best = std::numeric_limits<double>::quiet_NaN();
        out.error = e.what();
        // An external objective may be unusable after an error; restart it.
        objectives.erase(pi);
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work);
  }

  BenchResult result;
  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    const std::size_t pi = cell / algos.size();
    const std::size_t ai = cell % algos.size();
    CellResult c;
    c.problem = spec.problems[pi].name;
    c.dim = info[pi].dim;
    c.algorithm = algos[ai].label();
    c.algorithm_tag = algos[ai].tag();
    c.sweep_point = algos[ai].sweep_point;
    c.budget = spec.budget;
    c.reps = spec.repetitions;
    double wall = 0.0, samples = 0.0;
    for (std::size_t r = 0; r < spec.repetitions; ++r) {
      const auto& o = outcomes[cell * spec.repetitions + r];
      c.per_rep_best.push_back(o.best);
      c.per_rep_seed.push_back(o.seed);
      wall += o.wall_ms;
      samples += o.samples;
      if (!o.error.empty() && c.error.empty())
        c.error = o.error;
    }
    const double reps = static_cast<double>(spec.repetitions);
    c.mean_wall_ms = wall / reps;
    c.mean_samples = samples / reps;
    if (c.failed()) {
      c.mean_best = c.std_best = std::numeric_limits<double>::quiet_NaN();
    } else {
      std::tie(c.mean_best, c.std_best) = mean_std(c.per_rep_best);
      if (info[pi].known_max) {
        double s = 0.0;
        for (double b : c.per_rep_best)
          s += std::max(0.0, *info[pi].known_max - b);
        c.mean_regret = s / reps;
      }
    }
    result.cells.push_back(std::move(c));
  }
  return result;
}

//==============================================================================
// Reporting

//! Problems x algorithms table of "mean (std)" cells with a "# Top-1" footer.
struct SummaryTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  //! cells[row][col]; empty string when the combination was not run.
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> top1;

  std::string render() const {
    std::vector<std::size_t> width(column_labels.size() + 1, 0);
    width[0] = std::string("# Top-1").size();
    for (const auto& r : row_labels)
      width[0] = std::max(width[0], r.size());
    for (std::size_t c = 0; c < column_labels.size(); ++c) {
      width[c + 1] = column_labels[c].size();
      for (const auto& row : cells)
        width[c + 1] = std::max(width[c + 1], row[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::string& head, auto&& col) {
      os << std::left << std::setw(static_cast<int>(width[0])) << head;
      for (std::size_t c = 0; c < column_labels.size(); ++c)
        os << "  " << std::right << std::setw(static_cast<int>(width[c + 1])) << col(c);
      os << '\n';
    };
    line("problem", [&](std::size_t c) { return column_labels[c]; });
    for (std::size_t r = 0; r < row_labels.size(); ++r)
      line(row_labels[r], [&](std::size_t c) { return cells[r][c]; });
    line("# Top-1", [&](std::size_t c) { return std::to_string(top1[c]); });
    return os.str();
  }
};

inline std::string fixed2(double v) {
  if (std::isnan(v))
    return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00")
    s = "0.00";
  return s;
}

inline std::string column_label(const CellResult& c) {
  return c.sweep_point.empty() ? c.algorithm_tag : c.algorithm + "[" + c.sweep_point + "]";
}

inline std::string row_label(const CellResult& c) {
  return c.problem + " " + std::to_string(c.dim) + "D";
}

//! Ties at two decimals all count as Top-1; nan cells never do.
inline SummaryTable summarize(const BenchResult& result) {
  ecp::detail::require(!result.cells.empty(), "summarize: empty result");
  SummaryTable t;
  auto index_of = [](std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    if (it != v.end())
      return static_cast<std::size_t>(it - v.begin());
    v.push_back(s);
    return v.size() - 1;
  };
  std::vector<std::tuple<std::size_t, std::size_t, const CellResult*>> placed;
  for (const auto& c : result.cells)
    placed.emplace_back(index_of(t.row_labels, row_label(c)), index_of(t.column_labels, column_label(c)),
                        &c);
  t.cells.assign(t.row_labels.size(), std::vector<std::string>(t.column_labels.size()));
  std::vector<std::vector<std::optional<double>>> rounded(
      t.row_labels.size(), std::vector<std::optional<double>>(t.column_labels.size()));
  for (auto [r, col, c] : placed) {
    t.cells[r][col] = fixed2(c->mean_best) + " (" + fixed2(c->std_best) + ")";
    if (!std::isnan(c->mean_best))
      rounded[r][col] = std::stod(fixed2(c->mean_best));
  }
  t.top1.assign(t.column_labels.size(), 0);
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    std::optional<double> best;
    for (const auto& v : rounded[r])
      if (v && (!best || *v > *best))
        best = v;
    if (!best)
      continue;
    for (std::size_t col = 0; col < t.column_labels.size(); ++col)
      if (rounded[r][col] && *rounded[r][col] == *best)
        ++t.top1[col];
  }
  return t;
}

struct Ranking {
  std::vector<std::string> algorithms;
  std::vector<std::string> problems;
  //! ranks[a][p]: rank of algorithm a on problem p (1 = best, ties averaged).
  std::vector<std::vector<double>> ranks;

  double median_rank(std::size_t a) const {
    std::vector<double> v = ranks[a];
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  }

  //! Long-format CSV: algorithm,problem,rank.
  std::string to_csv() const {
    std::ostringstream os;
    os << "algorithm,problem,rank\n";
    for (std::size_t a = 0; a < algorithms.size(); ++a)
      for (std::size_t p = 0; p < problems.size(); ++p)
        os << algorithms[a] << ',' << problems[p] << ',' << ranks[a][p] << '\n';
    return os.str();
  }
};

//! Per-problem ranking by mean best value. nan cells rank last.
inline Ranking rank(const BenchResult& result) {
  Ranking rk;
  auto index_of = [](std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    if (it != v.end())
      return static_cast<std::size_t>(it - v.begin());
    v.push_back(s);
    return v.size() - 1;
  };
  std::vector<std::tuple<std::size_t, std::size_t, double>> placed;
  for (const auto& c : result.cells)
    placed.emplace_back(index_of(rk.algorithms, column_label(c)), index_of(rk.problems, row_label(c)),
                        c.mean_best);
  ecp::detail::require(rk.algorithms.size() >= 2, "rank: at least two algorithms required");
  const double lowest = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> score(rk.algorithms.size(),
                                         std::vector<double>(rk.problems.size(), lowest));
  for (auto [a, p, m] : placed)
    score[a][p] = std::isnan(m) ? lowest : m;
  rk.ranks.assign(rk.algorithms.size(), std::vector<double>(rk.problems.size(), 0.0));
  for (std::size_t p = 0; p < rk.problems.size(); ++p)
    for (std::size_t a = 0; a < rk.algorithms.size(); ++a) {
      std::size_t better = 0, equal = 0;
      for (std::size_t b = 0; b < rk.algorithms.size(); ++b) {
        if (score[b][p] > score[a][p])
          ++better;
        else if (score[b][p] == score[a][p])
          ++equal;
      }
      // Average of positions better+1 .. better+equal.
      rk.ranks[a][p] = static_cast<double>(better) + 0.5 * static_cast<double>(equal + 1);
    }
  return rk;
}

//==============================================================================
// Files

inline const char* kCsvHeader =
    "problem,dim,algorithm,sweep_point,budget,reps,mean_best,std_best,mean_regret,mean_wall_ms,"
    "mean_samples";

inline std::string csv_number(double v) {
  if (std::isnan(v))
    return "nan";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline std::string to_csv(const BenchResult& r) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& c : r.cells) {
    const std::string algo =
        c.algorithm_tag.substr(0, c.algorithm_tag.find('['));
    os << c.problem << ',' << c.dim << ',' << algo << ',' << c.sweep_point << ',' << c.budget
       << ',' << c.reps << ',' << csv_number(c.mean_best) << ',' << csv_number(c.std_best)
       << ',' << (c.mean_regret ? csv_number(*c.mean_regret) : std::string()) << ','
       << csv_number(c.mean_wall_ms) << ',' << csv_number(c.mean_samples) << '\n';
  }
  return os.str();
}

inline nlohmann::json to_json(const BenchResult& r) {
  nlohmann::json cells = nlohmann::json::array();
  auto num = [](double v) { return std::isnan(v) ? nlohmann::json("nan") : nlohmann::json(v); };
  for (const auto& c : r.cells) {
    nlohmann::json per_rep = nlohmann::json::array();
    for (double v : c.per_rep_best)
      per_rep.push_back(num(v));
    nlohmann::json j{{"problem", c.problem},
                     {"dim", c.dim},
                     {"algorithm", c.algorithm_tag},
                     {"sweep_point", c.sweep_point},
                     {"budget", c.budget},
                     {"reps", c.reps},
                     {"mean_best", num(c.mean_best)},
                     {"std_best", num(c.std_best)},
                     {"mean_wall_ms", c.mean_wall_ms},
                     {"mean_samples", c.mean_samples},
                     {"per_rep_best", per_rep},
                     {"per_rep_seed", c.per_rep_seed}};
    j["mean_regret"] = c.mean_regret ? nlohmann::json(*c.mean_regret) : nlohmann::json(nullptr);
    if (c.failed())
      j["error"] = c.error;
    cells.push_back(std::move(j));
  }
  return {{"cells", std::move(cells)}};
}

//! Writes <stem>.csv, <stem>.json and, with two or more algorithms, <stem>_ranks.csv.
inline void write_outputs(const BenchResult& r, std::string stem) {
  if (stem.size() > 4 && stem.ends_with(".csv"))
    stem.resize(stem.size() - 4);
  auto write = [](const std::string& path, const std::string& body) {
    std::ofstream f(path);
    if (!f)
      throw Error("cannot write '" + path + "'");
    f << body;
  };
  write(stem + ".csv", to_csv(r));
  write(stem + ".json", to_json(r).dump(2) + "\n");
  std::vector<std::string> algos;
  for (const auto& c : r.cells)
    if (std::find(algos.begin(), algos.end(), column_label(c)) == algos.end())
      algos.push_back(column_label(c));
  if (algos.size() >= 2)
    write(stem + "_ranks.csv", rank(r).to_csv());
}

//==============================================================================
// Spec files

inline BoxDomain domain_from_json(const nlohmann::json& j) {
  return {j.at("lower").get<std::vector<double>>(), j.at("upper").get<std::vector<double>>()};
}

inline AlgorithmSpec algorithm_from_json(const nlohmann::json& j) {
  const std::string type = j.is_string() ? j.get<std::string>() : j.at("type").get<std::string>();
  AlgorithmSpec a;
  if (type == "prs") {
    a.optimizer = OptimizerSpec::make_prs();
  } else if (type == "lipo") {
    ecp::detail::require(j.is_object() && j.contains("k"), "lipo algorithm requires 'k'");
    a.optimizer = OptimizerSpec::make_lipo(j.at("k").get<double>());
  } else if (type == "ecp") {
    EcpConfig c;
    if (j.is_object()) {
      c.eps1 = j.value("eps1", c.eps1);
      c.tau_floor = j.value("tau_floor", c.tau_floor);
      c.c_growth = j.value("c_growth", c.c_growth);
      c.max_attempts_per_round = j.value("max_attempts_per_round", c.max_attempts_per_round);
      if (j.contains("tau") && !j["tau"].is_null())
        c.tau = j["tau"].get<double>();
    }
    a.optimizer = OptimizerSpec::make_ecp(c);
  } else {
    throw InvalidArgument("unknown algorithm type '" + type + "'");
  }
  return a;
}

inline ExperimentSpec spec_from_json(const nlohmann::json& j) {
  ExperimentSpec s;
  for (const auto& p : j.at("problems")) {
    ProblemSpec ps;
    if (p.is_string()) {
      ps.name = p.get<std::string>();
    } else {
      ps.name = p.at("name").get<std::string>();
      ps.dim = p.value("dim", std::size_t{0});
      if (p.contains("domain"))
        ps.domain = domain_from_json(p.at("domain"));
      if (p.contains("command"))
        ps.command = p.at("command").get<std::string>();
      if (p.contains("timeout_ms"))
        ps.timeout = std::chrono::milliseconds(p.at("timeout_ms").get<long long>());
    }
    s.problems.push_back(std::move(ps));
  }
  for (const auto& a : j.at("algorithms"))
    s.algorithms.push_back(algorithm_from_json(a));
  s.budget = j.value("budget", s.budget);
  s.repetitions = j.value("repetitions", s.repetitions);
  s.base_seed = j.value("base_seed", s.base_seed);
  s.output = j.value("output", s.output);
  s.workers = j.value("workers", s.workers);
  if (j.contains("sweep") && !j["sweep"].is_null()) {
    SweepGrid g;
    const auto& sw = j["sweep"];
    g.eps1 = sw.value("eps1", std::vector<double>{});
    g.tau_floor = sw.value("tau_floor", std::vector<double>{});
    g.c_growth = sw.value("c_growth", std::vector<double>{});
    s.sweep = g;
  }
  return s;
}

inline ExperimentSpec load_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw InvalidArgument("cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("spec file '" + path + "': " + e.what());
  }
  try {
    return spec_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("spec file '" + path + "': " + e.what());
  }
}

}  // namespace ecp::bench

// ecp_bench: run experiments, parameter sweeps and theory diagnostics.
//
//   ecp_bench run      --spec FILE | --objective NAME [--algo ecp|prs|lipo]...
//   ecp_bench sweep    --objective NAME [--eps1-grid ...] [--tau-grid ...] [--capc-grid ...]
//   ecp_bench diagnose --objective NAME [--budget N] [--k K]
//   ecp_bench trace    --objective NAME [--algo ecp] [--seed S]
//
// Exit codes: 0 success, 1 configuration error, 2 some cell is nan.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecp/ecp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNan = 2;

struct ProblemArgs {
  std::vector<std::string> objectives;
  std::size_t dim = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  std::string command;
  long long timeout_ms = ecp::kDefaultExternalTimeout.count();
};

struct AlgoArgs {
  std::vector<std::string> algos;
  double eps1 = 1e-2;
  double tau_floor = 1.001;
  std::optional<double> tau;
  double capc = 1e3;
  std::uint64_t max_attempts = 10'000'000;
  std::optional<double> k;
};

struct RunArgs {
  std::string spec;
  std::size_t budget = 50;
  std::size_t reps = 100;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t workers = 0;
  bool quiet = false;
};

void add_problem_options(CLI::App* app, ProblemArgs& p) {
  app->add_option("--objective", p.objectives, "Builtin objective name (repeatable)");
  app->add_option("--dim", p.dim, "Dimension (0 = objective default)");
  app->add_option("--lower", p.lower, "Domain lower bounds (one value is broadcast)")
      ->expected(1, -1);
  app->add_option("--upper", p.upper, "Domain upper bounds (one value is broadcast)")
      ->expected(1, -1);
  app->add_option("--command", p.command, "External objective command (line protocol)");
  app->add_option("--timeout-ms", p.timeout_ms, "Per-call timeout for --command");
}

void add_algo_options(CLI::App* app, AlgoArgs& a) {
  app->add_option("--eps1", a.eps1, "Initial epsilon");
  app->add_option("--tau-floor", a.tau_floor, "Lower bound on the growth factor tau");
  app->add_option("--tau", a.tau, "Fixed growth factor (overrides the budget rule)");
  app->add_option("--capc", a.capc, "Growth threshold C");
  app->add_option("--max-attempts", a.max_attempts, "Candidate draws allowed per round");
  app->add_option("--k", a.k, "Lipschitz constant for --algo lipo");
}

void add_run_options(CLI::App* app, RunArgs& r) {
  app->add_option("--budget", r.budget, "Evaluations per run");
  app->add_option("--reps", r.reps, "Repetitions per cell");
  app->add_option("--seed", r.seed, "Base seed");
  app->add_option("--out", r.out, "Output stem; writes <stem>.csv, <stem>.json, <stem>_ranks.csv");
  app->add_option("--workers", r.workers, "Worker threads (0 = hardware concurrency)");
  app->add_flag("--quiet", r.quiet, "Do not print the summary table");
}

std::optional<ecp::BoxDomain> domain_override(const ProblemArgs& p, std::size_t dim) {
  if (p.lower.empty() && p.upper.empty())
    return std::nullopt;
  ecp::detail::require(!p.lower.empty() && !p.upper.empty(),
                       "--lower and --upper must be given together");
  auto widen = [dim](const std::vector<double>& v) {
    return v.size() == 1 ? std::vector<double>(dim, v[0]) : v;
  };
  return ecp::BoxDomain(widen(p.lower), widen(p.upper));
}

std::vector<ecp::bench::ProblemSpec> problems_from(const ProblemArgs& p) {
  std::vector<ecp::bench::ProblemSpec> out;
  if (!p.command.empty()) {
    ecp::detail::require(p.objectives.size() <= 1, "--command takes at most one --objective name");
    std::size_t dim = p.dim;
    if (dim == 0)
      dim = std::max(p.lower.size(), p.upper.size());
    ecp::detail::require(dim >= 1, "--command needs --dim or explicit bounds");
    ecp::bench::ProblemSpec ps;
    ps.name = p.objectives.empty() ? "external" : p.objectives[0];
    ps.dim = dim;
    ps.command = p.command;
    ps.domain = domain_override(p, dim);
    ecp::detail::require(ps.domain.has_value(), "--command needs --lower and --upper");
    ps.timeout = std::chrono::milliseconds(p.timeout_ms);
    out.push_back(std::move(ps));
    return out;
  }
  ecp::detail::require(!p.objectives.empty(), "no --objective given");
  for (const auto& name : p.objectives) {
    ecp::bench::ProblemSpec ps;
    ps.name = name;
    ps.dim = p.dim;
    const std::size_t dim = ecp::builtin(name, p.dim).dim;
    ps.domain = domain_override(p, dim);
    out.push_back(std::move(ps));
  }
  return out;
}

ecp::EcpConfig ecp_config_from(const AlgoArgs& a) {
  ecp::EcpConfig c;
  c.eps1 = a.eps1;
  c.tau_floor = a.tau_floor;
  c.tau = a.tau;
  c.c_growth = a.capc;
  c.max_attempts_per_round = a.max_attempts;
  return c;
}

std::vector<ecp::bench::AlgorithmSpec> algorithms_from(const AlgoArgs& a) {
  std::vector<std::string> names = a.algos.empty() ? std::vector<std::string>{"ecp"} : a.algos;
  std::vector<ecp::bench::AlgorithmSpec> out;
  for (const auto& n : names) {
    ecp::bench::AlgorithmSpec s;
    switch (ecp::algorithm_from_string(n)) {
    case ecp::Algorithm::ecp:
      s.optimizer = ecp::OptimizerSpec::make_ecp(ecp_config_from(a));
      break;
    case ecp::Algorithm::prs:
      s.optimizer = ecp::OptimizerSpec::make_prs();
      break;
    case ecp::Algorithm::lipo:
      ecp::detail::require(a.k.has_value(), "--algo lipo requires --k");
      s.optimizer = ecp::OptimizerSpec::make_lipo(*a.k);
      break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

int execute(const ecp::bench::ExperimentSpec& spec, bool quiet) {
  for (const auto& a : ecp::bench::expand_sweep(spec.algorithms, spec.sweep))
    if (a.optimizer.kind == ecp::Algorithm::ecp)
      for (const auto& p : spec.problems) {
        const std::size_t dim = p.domain ? p.domain->dim() : ecp::builtin(p.name, p.dim).dim;
        ecp::EcpConfig c = a.optimizer.ecp;
        c.budget = spec.budget;
        c.validate(dim);
      }

  const auto result = ecp::bench::run_experiment(spec);
  if (!quiet)
    std::cout << ecp::bench::summarize(result).render();
  for (const auto& c : result.cells)
    if (c.failed())
      std::cerr << "error: " << c.problem << " / " << c.algorithm_tag << ": " << c.error << "\n";
  if (!spec.output.empty()) {
    ecp::bench::write_outputs(result, spec.output);
    if (!quiet)
      std::cout << "wrote " << spec.output << ".csv\n";
  }
  return result.any_nan() ? kExitNan : kExitOk;
}

void apply_run_overrides(ecp::bench::ExperimentSpec& spec, const CLI::App* app, const RunArgs& r) {
  if (app->count("--budget"))
    spec.budget = r.budget;
  if (app->count("--reps"))
    spec.repetitions = r.reps;
  if (app->count("--seed"))
    spec.base_seed = r.seed;
  if (app->count("--out"))
    spec.output = r.out;
  if (app->count("--workers"))
    spec.workers = r.workers;
}

ecp::bench::ExperimentSpec inline_spec(const ProblemArgs& p, const AlgoArgs& a, const RunArgs& r) {
  ecp::bench::ExperimentSpec spec;
  spec.problems = problems_from(p);
  spec.algorithms = algorithms_from(a);
  spec.budget = r.budget;
  spec.repetitions = r.reps;
  spec.base_seed = r.seed;
  spec.output = r.out;
  spec.workers = r.workers;
  return spec;
}

// Range of f over the domain: known maximum when available, otherwise probed.
double probe_range(const ecp::Objective& f, const ecp::BoxDomain& domain, std::size_t probes) {
  ecp::RngStream rng(0x5eed);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < probes; ++i) {
    const auto x = ecp::uniform_sample(domain, rng);
    const double v = f(x);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (f.known_max)
    hi = std::max(hi, *f.known_max);
  return hi - lo;
}

int diagnose(const ProblemArgs& p, const AlgoArgs& a, std::size_t budget,
             std::optional<double> delta_range, double confidence, std::size_t probes) {
  ecp::detail::require(p.objectives.size() == 1, "diagnose takes exactly one --objective");
  const auto f = ecp::builtin(p.objectives[0], p.dim);
  const auto domain = domain_override(p, f.dim).value_or(f.default_domain);
  ecp::EcpConfig c = ecp_config_from(a);
  c.budget = budget;
  c.validate(domain.dim());
  const double tau = c.effective_tau(domain.dim());
  const double range = delta_range ? *delta_range : probe_range(f, domain, probes);

  auto in = ecp::analysis::BoundInputs::for_domain(domain, range, c.eps1, tau, budget);
  const auto cap = ecp::analysis::growth_cap(in);

  std::cout << std::setprecision(6);
  std::cout << "objective      " << f.name << " (" << f.dim << "D)\n";
  std::cout << "domain volume  exp(" << domain.log_volume() << ")\n";
  std::cout << "diameter       " << domain.diameter() << "\n";
  std::cout << "delta range    " << range << (delta_range ? "" : " (probed)") << "\n";
  std::cout << "eps1           " << c.eps1 << "\n";
  std::cout << "tau            " << tau << "\n";
  std::cout << "budget n       " << budget << "\n";
  std::cout << "growth cap     " << cap << "\n";

  const std::optional<double> k = a.k ? a.k : f.known_lipschitz;
  if (!k) {
    std::cout << "k              unknown (pass --k for hitting time and regret bounds)\n\n";
  } else {
    const auto i_star = ecp::analysis::hitting_time_bound(*k, c.eps1, tau);
    std::cout << "k              " << *k << (a.k ? "" : " (builtin bound)") << "\n";
    std::cout << "hitting time   " << i_star << "\n";
    std::cout << "regret bound   "
              << ecp::analysis::regret_upper_bound(*k, domain.diameter(), i_star, budget,
                                                   confidence, domain.dim())
              << " (delta = " << confidence << ")\n\n";
  }

  std::cout << "round t   bound(v=0)     bound(v=cap)   raw(v=0)\n";
  std::vector<std::size_t> rounds{1};
  for (std::size_t t = 2; t < budget; t *= 2)
    rounds.push_back(t);
  if (budget > 1)
    rounds.push_back(budget);
  for (std::size_t t : rounds) {
    std::cout << std::left << std::setw(10) << t << std::setw(15)
              << ecp::analysis::rejection_prob_bound(in, t, 0) << std::setw(15)
              << ecp::analysis::rejection_prob_bound(in, t, cap)
              << ecp::analysis::rejection_prob_bound_raw(in, t, 0) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ECP global optimization benchmark"};
  app.require_subcommand(1);

  ProblemArgs run_p;
  AlgoArgs run_a;
  RunArgs run_r;
  auto* run = app.add_subcommand("run", "Run an experiment");
  run->add_option("--spec", run_r.spec, "Experiment spec (JSON)");
  add_problem_options(run, run_p);
  run->add_option("--algo", run_a.algos, "ecp, prs or lipo (repeatable)");
  add_algo_options(run, run_a);
  add_run_options(run, run_r);

  ProblemArgs sweep_p;
  AlgoArgs sweep_a;
  RunArgs sweep_r;
  std::vector<double> eps_grid{1e-4, 1e-2, 1.0};
  std::vector<double> tau_grid{1.001, 1.1, 2.0};
  std::vector<double> capc_grid{1.0, 1e3};
  bool with_prs = false;
  auto* sweep = app.add_subcommand("sweep", "Grid over eps1, tau_floor and C");
  add_problem_options(sweep, sweep_p);
  add_algo_options(sweep, sweep_a);
  add_run_options(sweep, sweep_r);
  sweep->add_option("--eps1-grid", eps_grid, "eps1 values");
  sweep->add_option("--tau-grid", tau_grid, "tau_floor values");
  sweep->add_option("--capc-grid", capc_grid, "C values");
  sweep->add_flag("--with-prs", with_prs, "Add a PRS column");
  sweep_r.reps = 10;

  ProblemArgs diag_p;
  AlgoArgs diag_a;
  std::size_t diag_budget = 50;
  std::optional<double> diag_range;
  double diag_conf = 0.1;
  std::size_t diag_probes = 100000;
  auto* diag = app.add_subcommand("diagnose", "Print theory bounds for a configuration");
  add_problem_options(diag, diag_p);
  add_algo_options(diag, diag_a);
  diag->add_option("--budget", diag_budget, "Budget n");
  diag->add_option("--range", diag_range, "max f - min f (probed when omitted)");
  diag->add_option("--confidence", diag_conf, "delta of the high-probability regret bound");
  diag->add_option("--probes", diag_probes, "Random probes used to estimate the range");

  ProblemArgs trace_p;
  AlgoArgs trace_a;
  std::size_t trace_budget = 50;
  std::uint64_t trace_seed = 0;
  auto* trace = app.add_subcommand("trace", "Run once and print the trace as JSON");
  add_problem_options(trace, trace_p);
  trace->add_option("--algo", trace_a.algos, "ecp, prs or lipo")->expected(0, 1);
  add_algo_options(trace, trace_a);
  trace->add_option("--budget", trace_budget, "Evaluations");
  trace->add_option("--seed", trace_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run) {
      ecp::bench::ExperimentSpec spec;
      if (!run_r.spec.empty()) {
        spec = ecp::bench::load_spec(run_r.spec);
        apply_run_overrides(spec, run, run_r);
      } else {
        spec = inline_spec(run_p, run_a, run_r);
      }
      return execute(spec, run_r.quiet);
    }
    if (*sweep) {
      auto spec = inline_spec(sweep_p, sweep_a, sweep_r);
      spec.algorithms = algorithms_from(AlgoArgs{{"ecp"}, sweep_a.eps1, sweep_a.tau_floor,
                                                 sweep_a.tau, sweep_a.capc,
                                                 sweep_a.max_attempts, sweep_a.k});
      if (with_prs)
        spec.algorithms.push_back({ecp::OptimizerSpec::make_prs(), ""});
      spec.sweep = ecp::bench::SweepGrid{eps_grid, tau_grid, capc_grid};
      return execute(spec, sweep_r.quiet);
    }
    if (*diag)
      return diagnose(diag_p, diag_a, diag_budget, diag_range, diag_conf, diag_probes);
    if (*trace) {
      const auto problems = problems_from(trace_p);
      ecp::detail::require(problems.size() == 1, "trace takes exactly one problem");
      const auto f = problems[0].make_objective();
      const auto domain = problems[0].domain.value_or(f.default_domain);
      const auto spec = algorithms_from(trace_a).at(0).optimizer;
      const auto t = ecp::optimize(spec, f, domain, trace_budget, trace_seed);
      std::cout << ecp::to_json(t).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const ecp::InvalidArgument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ecp::UnknownObjective& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ecp::UnsupportedDimension& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

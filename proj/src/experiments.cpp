#include "hopforce/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "hopforce/errors.hpp"
#include "hopforce/exact_solver.hpp"
#include "hopforce/random_models.hpp"
#include "hopforce/rng.hpp"
#include "hopforce/strategies.hpp"

namespace hopforce {

namespace {

using nlohmann::json;

// Numbers go through the same 6-digit rounding as CSV so JSON output is
// equally stable.
double rounded(double v) { return std::stod(format_sig6(v)); }

void write_csv_row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

}  // namespace

Model parse_model(std::string_view s) {
  if (s == "config") return Model::config;
  if (s == "contiguous") return Model::contiguous;
  throw ConfigError("unknown model '" + std::string(s) + "' (config|contiguous)");
}

Strategy parse_strategy(std::string_view s) {
  if (s == "hamilton") return Strategy::hamilton;
  if (s == "greedy") return Strategy::greedy;
  if (s == "exact") return Strategy::exact;
  throw ConfigError("unknown strategy '" + std::string(s) + "' (hamilton|greedy|exact)");
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("unknown format '" + std::string(s) + "' (csv|json)");
}

const char* to_string(Model m) { return m == Model::config ? "config" : "contiguous"; }

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::hamilton:
      return "hamilton";
    case Strategy::greedy:
      return "greedy";
    case Strategy::exact:
      return "exact";
  }
  return "?";
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.d < 2) throw ConfigError("d must be >= 2");
  if (cfg.n < 3) throw ConfigError("n must be >= 3");
  if (cfg.d == 2) {
    if (cfg.model != Model::config) throw ConfigError("d = 2 runs count cycles of the configuration model");
    return;
  }
  switch (cfg.strategy) {
    case Strategy::hamilton:
      if (cfg.model != Model::contiguous) throw ConfigError("the Hamilton-hop strategy runs on the contiguous model");
      if ((cfg.n * (cfg.d - 2)) % 2 != 0) throw ConfigError("contiguous model needs n(d-2) even");
      break;
    case Strategy::greedy:
      if (cfg.model != Model::config) throw ConfigError("degree-greedy runs on the configuration model");
      if (cfg.d != 3) throw ConfigError("degree-greedy is defined for d = 3 only");
      if (cfg.n % 2 != 0) throw ConfigError("3-regular graphs need n even");
      break;
    case Strategy::exact:
      if (cfg.model != Model::config) throw ConfigError("exact runs sample simple graphs from the configuration model");
      if ((cfg.n * cfg.d) % 2 != 0) throw ConfigError("configuration model needs dn even");
      if (cfg.n <= cfg.d) throw ConfigError("simple d-regular graphs need n > d");
      if (cfg.n > solver_limit())
        throw InstanceTooLarge("exact solver limit is " + std::to_string(solver_limit()) + " vertices");
      break;
  }
}

TrialOutcome run_trial(const ExperimentConfig& cfg, std::size_t trial) {
  Rng rng = make_stream(cfg.master_seed, trial);
  TrialOutcome out;
  TrialRecord& rec = out.record;
  rec.trial = trial;
  const double n = static_cast<double>(cfg.n);

  if (cfg.d == 2) {
    const std::size_t cycles = count_cycles_2regular(cfg.n, rng);
    rec.x = cycles;
    rec.b1_size = 3 * cycles;
    rec.hops = cfg.n - rec.b1_size;
    rec.value = static_cast<double>(rec.b1_size);
    return out;
  }

  StrategyResult res;
  switch (cfg.strategy) {
    case Strategy::hamilton:
      res = hamilton_hop_strategy(sample_contiguous(cfg.n, cfg.d, rng)).result;
      break;
    case Strategy::greedy: {
      GreedyRun run = degree_greedy_strategy(cfg.n, rng, false);
      res = std::move(run.result);
      break;
    }
    case Strategy::exact: {
      const Graph g = sample_simple_regular(cfg.n, cfg.d, rng);
      ExactResult ex = solve_exact(g);
      rec.b1_size = ex.hopping_number;
      rec.hops = ex.trace.size();
      rec.x = ex.hopping_number;
      rec.value = static_cast<double>(ex.hopping_number);
      out.b1 = std::move(ex.optimal_blue);
      out.hops = std::move(ex.trace);
      return out;
    }
  }
  rec.b1_size = res.b1_size;
  rec.hops = res.hops.size();
  rec.x = res.failed_attempts;
  rec.value = static_cast<double>(res.b1_size) / n;
  out.b1 = std::move(res.b1);
  out.hops = std::move(res.hops);
  return out;
}

TrialStats summarize(std::span<const double> values, bool keep_values) {
  TrialStats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = s.count > 1 ? std::sqrt(ss / static_cast<double>(s.count - 1)) : 0.0;
  s.se = s.sd / std::sqrt(static_cast<double>(s.count));
  s.ci_low = s.mean - 1.959963984540054 * s.se;
  s.ci_high = s.mean + 1.959963984540054 * s.se;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  if (keep_values) s.values.assign(values.begin(), values.end());
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentResult result;
  result.trials.resize(cfg.trials);

  std::size_t jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, cfg.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cfg.trials;) {
      try {
        result.trials[i] = run_trial(cfg, i).record;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(cfg.trials);
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> values;
  values.reserve(cfg.trials);
  for (const auto& r : result.trials) values.push_back(r.value);
  result.stats = summarize(values, true);
  return result;
}

std::vector<unsigned> table1_degrees() { return {3, 4, 5, 6, 7, 8, 9, 10, 20, 40, 80, 160, 320, 640, 1280}; }

std::vector<BoundReport> table1_report(std::span<const unsigned> degrees) {
  std::vector<BoundReport> rows;
  rows.reserve(degrees.size());
  for (unsigned d : degrees) rows.push_back(bound_report(d));
  return rows;
}

std::string format_sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_trials(std::ostream& out, std::span<const TrialRecord> trials, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& t : trials) arr.push_back({{"trial", t.trial}, {"b1_size", t.b1_size}, {"hops", t.hops}, {"X", t.x}});
    out << arr.dump(2) << '\n';
    return;
  }
  out << "trial,b1_size,hops,X\n";
  for (const auto& t : trials)
    write_csv_row(out, {std::to_string(t.trial), std::to_string(t.b1_size), std::to_string(t.hops), std::to_string(t.x)});
}

void write_bound_rows(std::ostream& out, std::span<const BoundReport> rows, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"d", r.d},
                     {"eml", rounded(r.eml)},
                     {"config", rounded(r.config)},
                     {"upper_rational", to_string(r.upper)},
                     {"upper_float", rounded(r.upper_value)}});
    out << arr.dump(2) << '\n';
    return;
  }
  out << "d,eml,config,upper_rational,upper_float\n";
  for (const auto& r : rows)
    write_csv_row(out, {std::to_string(r.d), format_sig6(r.eml), format_sig6(r.config), to_string(r.upper),
                        format_sig6(r.upper_value)});
}

void write_ode_summary(std::ostream& out, const OdeSolution& sol, Format format) {
  if (format == Format::json) {
    const json j = {{"x_hat", rounded(sol.x_hat)},
                    {"hop_fraction", rounded(sol.hop_fraction)},
                    {"implied_bound", rounded(sol.implied_bound)},
                    {"termination", sol.termination}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "x_hat,hop_fraction,implied_bound,termination\n";
  write_csv_row(out, {format_sig6(sol.x_hat), format_sig6(sol.hop_fraction), format_sig6(sol.implied_bound),
                      sol.termination});
}

void write_trajectory(std::ostream& out, const OdeSolution& sol, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& p : sol.trajectory)
      arr.push_back({{"x", rounded(p.x)},
                     {"y0", rounded(p.y[0])},
                     {"y1", rounded(p.y[1])},
                     {"y2", rounded(p.y[2])},
                     {"y3", rounded(p.y[3])},
                     {"hopped", rounded(p.hopped)}});
    out << arr.dump(2) << '\n';
    return;
  }
  out << "x,y0,y1,y2,y3,hopped\n";
  for (const auto& p : sol.trajectory)
    write_csv_row(out, {format_sig6(p.x), format_sig6(p.y[0]), format_sig6(p.y[1]), format_sig6(p.y[2]),
                        format_sig6(p.y[3]), format_sig6(p.hopped)});
}

void figure_data(std::ostream& out, std::string_view which, Format format) {
  if (which == "bounds-curve") {
    const auto degrees = table1_degrees();
    write_bound_rows(out, table1_report(degrees), format);
  } else if (which == "ode-trajectory") {
    write_trajectory(out, solve_degree_greedy_ode(), format);
  } else if (which == "h-curve") {
    json arr = json::array();
    if (format == Format::csv) out << "d,x,h\n";
    for (unsigned d : {3u, 10u}) {
      for (int k = 1; k < 200; ++k) {
        const double x = k / 200.0;
        const double h = h_d(d, x);
        if (format == Format::csv)
          write_csv_row(out, {std::to_string(d), format_sig6(x), format_sig6(h)});
        else
          arr.push_back({{"d", d}, {"x", rounded(x)}, {"h", rounded(h)}});
      }
    }
    if (format == Format::json) out << arr.dump(2) << '\n';
  } else {
    throw ConfigError("unknown figure '" + std::string(which) + "' (bounds-curve|ode-trajectory|h-curve)");
  }
}

}  // namespace hopforce

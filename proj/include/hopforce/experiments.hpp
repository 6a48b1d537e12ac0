#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopforce/bounds.hpp"
#include "hopforce/de_solver.hpp"
#include "hopforce/graph.hpp"
#include "hopforce/hop_engine.hpp"

namespace hopforce {

enum class Model { config, contiguous };
enum class Strategy { hamilton, greedy, exact };
enum class Format { csv, json };

Model parse_model(std::string_view s);
Strategy parse_strategy(std::string_view s);
Format parse_format(std::string_view s);
const char* to_string(Model m);
const char* to_string(Strategy s);

struct ExperimentConfig {
  Model model = Model::contiguous;
  Strategy strategy = Strategy::hamilton;
  std::size_t d = 3;
  std::size_t n = 1000;
  std::size_t trials = 1;
  std::uint64_t master_seed = 1;
  std::size_t jobs = 0;  // 0: one worker per hardware thread
  std::string output;    // empty: stdout
  Format format = Format::csv;
};

// Throws ConfigError. d = 2 always means the cycle count of the
// configuration model, where H = 3 * (number of cycles).
void validate(const ExperimentConfig& cfg);

struct TrialRecord {
  std::size_t trial = 0;
  std::size_t b1_size = 0;
  std::size_t hops = 0;
  // Strategy-specific count: failed hop attempts for the two strategies,
  // the number of cycles for d = 2, H itself for the exact solver.
  std::size_t x = 0;
  // The aggregated statistic: b1_size / n, or H for d = 2 and exact runs.
  double value = 0.0;
};

struct TrialOutcome {
  TrialRecord record;
  VertexSet b1;
  std::vector<Hop> hops;  // empty for d = 2
};

// One trial on stream (master_seed, trial).
TrialOutcome run_trial(const ExperimentConfig& cfg, std::size_t trial);

struct TrialStats {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, 0 for a single value
  double se = 0.0;
  double ci_low = 0.0;  // normal-approximation 95% interval
  double ci_high = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::vector<double> values;
};

TrialStats summarize(std::span<const double> values, bool keep_values = false);

struct ExperimentResult {
  std::vector<TrialRecord> trials;  // in trial-index order
  TrialStats stats;
};

// Trials run on `jobs` threads pulling indices from a shared counter;
// records are stored by index so the result does not depend on scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::vector<unsigned> table1_degrees();
std::vector<BoundReport> table1_report(std::span<const unsigned> degrees);

// "%.6g"
std::string format_sig6(double v);

void write_trials(std::ostream& out, std::span<const TrialRecord> trials, Format format);
void write_bound_rows(std::ostream& out, std::span<const BoundReport> rows, Format format);
void write_ode_summary(std::ostream& out, const OdeSolution& sol, Format format);
void write_trajectory(std::ostream& out, const OdeSolution& sol, Format format);

// bounds-curve, ode-trajectory or h-curve. Throws ConfigError otherwise.
void figure_data(std::ostream& out, std::string_view which, Format format);

}  // namespace hopforce

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hopforce/errors.hpp"
#include "hopforce/experiments.hpp"

using namespace hopforce;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> column(const std::vector<std::string>& lines, std::size_t col) {
  std::vector<double> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string cell;
    for (std::size_t c = 0; c <= col; ++c) std::getline(row, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_CASE("summary statistics") {
  const std::vector<double> v{1, 2, 3, 4};
  const TrialStats s = summarize(v, true);
  CHECK(s.count == 4);
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.sd == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(s.se == doctest::Approx(s.sd / 2.0));
  CHECK(s.ci_low < s.mean);
  CHECK(s.ci_high > s.mean);
  CHECK(s.ci_high - s.mean == doctest::Approx(1.959963984540054 * s.se));
  CHECK(s.min == 1);
  CHECK(s.max == 4);
  CHECK(s.values == v);
  const std::vector<double> one{7};
  const TrialStats single = summarize(one);
  CHECK(single.sd == 0.0);
  CHECK(single.values.empty());
}

TEST_CASE("configuration validation") {
  ExperimentConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.trials = 1;
  cfg.n = 11;
  CHECK_THROWS_AS(validate(cfg), ConfigError);  // contiguous, d = 3, odd n
  cfg.n = 10;
  CHECK_NOTHROW(validate(cfg));
  cfg.strategy = Strategy::greedy;
  CHECK_THROWS_AS(validate(cfg), ConfigError);  // greedy on the contiguous model
  cfg.model = Model::config;
  cfg.d = 4;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.d = 3;
  CHECK_NOTHROW(validate(cfg));
  cfg.strategy = Strategy::exact;
  cfg.n = 40;
  CHECK_THROWS_AS(validate(cfg), InstanceTooLarge);
  CHECK_THROWS_AS(parse_model("erdos"), ConfigError);
  CHECK_THROWS_AS(parse_strategy("optimal"), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("results do not depend on the number of workers") {
  ExperimentConfig cfg;
  cfg.n = 600;
  cfg.trials = 9;
  cfg.master_seed = 123;
  cfg.jobs = 1;
  const ExperimentResult a = run_experiment(cfg);
  cfg.jobs = 4;
  const ExperimentResult b = run_experiment(cfg);
  REQUIRE(a.trials.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(a.trials[i].trial == i);
    CHECK(a.trials[i].b1_size == b.trials[i].b1_size);
    CHECK(a.trials[i].hops == b.trials[i].hops);
  }
  CHECK(a.stats.mean == b.stats.mean);
  std::ostringstream x;
  std::ostringstream y;
  write_trials(x, a.trials, Format::csv);
  write_trials(y, b.trials, Format::csv);
  CHECK(x.str() == y.str());
  CHECK(lines_of(x.str()).front() == "trial,b1_size,hops,X");
}

TEST_CASE("d = 2 trials report three hops-free vertices per cycle") {
  ExperimentConfig cfg;
  cfg.model = Model::config;
  cfg.d = 2;
  cfg.n = 1000;
  cfg.trials = 5;
  const ExperimentResult r = run_experiment(cfg);
  for (const auto& t : r.trials) {
    CHECK(t.b1_size == 3 * t.x);
    CHECK(t.value == static_cast<double>(t.b1_size));
    CHECK(t.b1_size + t.hops == 1000);
  }
}

TEST_CASE("exact trials solve sampled simple graphs") {
  ExperimentConfig cfg;
  cfg.model = Model::config;
  cfg.strategy = Strategy::exact;
  cfg.n = 10;
  cfg.trials = 3;
  const ExperimentResult r = run_experiment(cfg);
  for (const auto& t : r.trials) {
    CHECK(t.b1_size >= 1);
    CHECK(t.b1_size + t.hops == 10);
  }
  const TrialOutcome first = run_trial(cfg, 0);
  CHECK(first.record.b1_size == r.trials[0].b1_size);
  CHECK(first.b1.size() == first.record.b1_size);
}

TEST_CASE("six significant digits") {
  CHECK(format_sig6(1.0 / 3.0) == "0.333333");
  CHECK(format_sig6(0.0149385) == "0.0149385");
  CHECK(format_sig6(123456789.0) == "1.23457e+08");
  CHECK(format_sig6(2.0) == "2");
}

TEST_CASE("bound rows") {
  const auto degrees = table1_degrees();
  CHECK(degrees.size() == 15);
  std::ostringstream csv;
  write_bound_rows(csv, table1_report(degrees), Format::csv);
  const auto lines = lines_of(csv.str());
  REQUIRE(lines.size() == 16);
  CHECK(lines[0] == "d,eml,config,upper_rational,upper_float");
  CHECK(lines[1].rfind("3,0.0149385,", 0) == 0);
  CHECK(csv.str().find('\r') == std::string::npos);

  std::ostringstream js;
  const std::vector<unsigned> four{4};
  write_bound_rows(js, table1_report(four), Format::json);
  const auto parsed = nlohmann::json::parse(js.str());
  CHECK(parsed[0]["upper_rational"] == "16/35");
  CHECK(parsed[0]["upper_float"] == doctest::Approx(0.457143));
}

TEST_CASE("figure data") {
  std::ostringstream bounds;
  figure_data(bounds, "bounds-curve", Format::csv);
  CHECK(lines_of(bounds.str()).size() == 16);

  std::ostringstream ode;
  figure_data(ode, "ode-trajectory", Format::csv);
  const auto ode_lines = lines_of(ode.str());
  CHECK(ode_lines[0] == "x,y0,y1,y2,y3,hopped");
  CHECK(column(ode_lines, 0).back() == doctest::Approx(0.6614).epsilon(1e-3));

  std::ostringstream h;
  figure_data(h, "h-curve", Format::csv);
  const auto h_lines = lines_of(h.str());
  CHECK(h_lines[0] == "d,x,h");
  const auto ds = column(h_lines, 0);
  const auto hs = column(h_lines, 2);
  for (double d : {3.0, 10.0}) {
    std::vector<double> curve;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (ds[i] == d) curve.push_back(hs[i]);
    REQUIRE(curve.size() > 100);
    CHECK(curve.front() < 0.0);
    // One interior maximum: increasing, then decreasing.
    std::size_t peak = 0;
    for (std::size_t i = 1; i < curve.size(); ++i)
      if (curve[i] > curve[peak]) peak = i;
    CHECK(peak > 0);
    CHECK(peak + 1 < curve.size());
    for (std::size_t i = 1; i <= peak; ++i) CHECK(curve[i] >= curve[i - 1]);
    for (std::size_t i = peak + 1; i < curve.size(); ++i) CHECK(curve[i] <= curve[i - 1]);
    CHECK(std::abs(curve.back()) < 0.05);
  }
  std::ostringstream bad;
  CHECK_THROWS_AS(figure_data(bad, "figure-9", Format::csv), ConfigError);
}

TEST_CASE("degree-greedy implied bound at n = 10^5") {
  ExperimentConfig cfg;
  cfg.model = Model::config;
  cfg.strategy = Strategy::greedy;
  cfg.n = 100000;
  cfg.trials = 20;
  cfg.master_seed = 17;
  const ExperimentResult r = run_experiment(cfg);
  CHECK(std::abs(r.stats.mean - 0.4841) <= 0.01);
}

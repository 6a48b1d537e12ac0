// Command-line front end: graph generation, simulations, exact solving,
// spectral checks, analytic bounds, the ODE and figure data.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopforce/bounds.hpp"
#include "hopforce/de_solver.hpp"
#include "hopforce/errors.hpp"
#include "hopforce/exact_solver.hpp"
#include "hopforce/experiments.hpp"
#include "hopforce/graph.hpp"
#include "hopforce/random_models.hpp"
#include "hopforce/spectral.hpp"

using namespace hopforce;

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kTooLarge = 3, kInvariant = 4 };

struct Globals {
  std::uint64_t seed = 1;
  std::size_t jobs = 0;
  std::string format = "csv";
  std::string out;
};

// Writes to --out if given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ConfigError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open graph file " + path);
  return read_edge_list(in);
}

nlohmann::json members_json(const VertexSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (VertexId v : s.members()) arr.push_back(v);
  return arr;
}

std::string members_text(const VertexSet& s) {
  std::string text;
  for (VertexId v : s.members()) {
    if (!text.empty()) text += ' ';
    text += std::to_string(v);
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopping forcing on random regular graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--jobs", g.jobs, "worker threads (0: all cores)");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output file (default stdout)");

  std::string model = "config";
  std::size_t n = 0;
  std::size_t d = 3;
  bool simple = false;
  auto* gen = app.add_subcommand("gen", "sample a random regular graph as an edge list");
  gen->add_option("--model", model, "config or contiguous")->check(CLI::IsMember({"config", "contiguous"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--d", d)->required();
  gen->add_flag("--simple", simple, "reject until the configuration-model graph is simple");

  std::string strategy = "hamilton";
  std::optional<std::string> sim_model;
  std::size_t trials = 1;
  std::string trace_path;
  auto* simulate = app.add_subcommand("simulate", "run a strategy over independent trials");
  simulate->add_option("--strategy", strategy)->check(CLI::IsMember({"hamilton", "greedy", "exact"}));
  simulate->add_option("--model", sim_model, "defaults to the model the strategy runs on");
  simulate->add_option("--d", d)->required();
  simulate->add_option("--n", n)->required();
  simulate->add_option("--trials", trials);
  simulate->add_option("--emit-trace", trace_path, "write B_1 and the hops of trial 0 as JSON");

  std::string graph_path;
  auto* exact = app.add_subcommand("exact", "exact hopping number of a small graph");
  exact->add_option("--graph", graph_path)->required();

  auto* spectral = app.add_subcommand("spectral", "lambda(G) and the spectral lower bound");
  spectral->add_option("--graph", graph_path)->required();

  bool all_table1 = false;
  auto* bounds = app.add_subcommand("bounds", "analytic bounds for one d");
  bounds->add_option("--d", d);
  bounds->add_flag("--all-table1", all_table1);

  double step = OdeOptions{}.step;
  std::string trajectory_path;
  auto* ode = app.add_subcommand("ode", "degree-greedy differential equations (d = 3)");
  ode->add_option("--d", d)->check(CLI::IsMember({3}));
  ode->add_option("--step", step);
  ode->add_option("--emit-trajectory", trajectory_path);

  std::string which;
  auto* figure = app.add_subcommand("figure", "plottable data");
  figure->add_option("which", which, "bounds-curve, ode-trajectory or h-curve")->required();

  auto* table1 = app.add_subcommand("table1", "all bound rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    const Format format = parse_format(g.format);
    Output output(g.out);
    std::ostream& out = output.stream();

    if (*gen) {
      Rng rng = make_stream(g.seed, 0);
      if (model == "contiguous") {
        const ContiguousGraph cg = sample_contiguous(n, d, rng);
        write_edge_list(out, cg.graph, std::span<const VertexId>(cg.hamilton_order));
      } else if (simple) {
        write_edge_list(out, sample_simple_regular(n, d, rng));
      } else {
        if ((n * d) % 2 != 0) throw ConfigError("configuration model needs dn even");
        write_edge_list(out, pairing_to_graph(sample_pairing(n, d, rng)));
      }
    } else if (*simulate) {
      ExperimentConfig cfg;
      cfg.strategy = parse_strategy(strategy);
      cfg.model = sim_model ? parse_model(*sim_model)
                            : (cfg.strategy == Strategy::hamilton && d != 2 ? Model::contiguous : Model::config);
      cfg.d = d;
      cfg.n = n;
      cfg.trials = trials;
      cfg.master_seed = g.seed;
      cfg.jobs = g.jobs;
      cfg.output = g.out;
      cfg.format = format;
      const ExperimentResult res = run_experiment(cfg);
      write_trials(out, res.trials, format);
      const TrialStats& s = res.stats;
      std::cerr << "mean=" << format_sig6(s.mean) << " sd=" << format_sig6(s.sd) << " se=" << format_sig6(s.se)
                << " ci95=[" << format_sig6(s.ci_low) << ", " << format_sig6(s.ci_high) << "]\n";
      if (!trace_path.empty()) {
        const TrialOutcome first = run_trial(cfg, 0);
        std::ofstream trace(trace_path, std::ios::binary);
        if (!trace) throw ConfigError("cannot open trace file " + trace_path);
        trace << trace_to_json(first.b1, first.hops).dump(2) << '\n';
      }
    } else if (*exact) {
      const ExactResult res = solve_exact(load_graph(graph_path));
      if (format == Format::json) {
        out << nlohmann::json{{"H", res.hopping_number}, {"B1", members_json(res.optimal_blue)}}.dump(2) << '\n';
      } else {
        out << "H,B1\n" << res.hopping_number << ',' << members_text(res.optimal_blue) << '\n';
      }
    } else if (*spectral) {
      const Graph graph = load_graph(graph_path);
      const SpectrumSummary s = lambda_of(graph);
      const double fraction = eml_fraction(static_cast<unsigned>(graph.degree()), s.lambda);
      const double bound = fraction * static_cast<double>(graph.order());
      if (format == Format::json) {
        out << nlohmann::json{{"lambda", std::stod(format_sig6(s.lambda))},
                              {"eml_fraction", std::stod(format_sig6(fraction))},
                              {"lower_bound", std::stod(format_sig6(bound))}}
                   .dump(2)
            << '\n';
      } else {
        out << "lambda,eml_fraction,lower_bound\n"
            << format_sig6(s.lambda) << ',' << format_sig6(fraction) << ',' << format_sig6(bound) << '\n';
      }
    } else if (*bounds) {
      std::vector<unsigned> degrees =
          all_table1 ? table1_degrees() : std::vector<unsigned>{static_cast<unsigned>(d)};
      write_bound_rows(out, table1_report(degrees), format);
    } else if (*ode) {
      OdeOptions options;
      options.step = step;
      const OdeSolution sol = solve_degree_greedy_ode(options);
      write_ode_summary(out, sol, format);
      if (!trajectory_path.empty()) {
        std::ofstream traj(trajectory_path, std::ios::binary);
        if (!traj) throw ConfigError("cannot open trajectory file " + trajectory_path);
        write_trajectory(traj, sol, Format::csv);
      }
    } else if (*figure) {
      figure_data(out, which, format);
    } else if (*table1) {
      const auto degrees = table1_degrees();
      write_bound_rows(out, table1_report(degrees), format);
    }
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const HopIllegal& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kOk;
}

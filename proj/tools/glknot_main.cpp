// Command-line front end: knot extraction, adaptive testing, clustering,
// null-distribution tables and Monte Carlo simulation on correlation data.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "glknot/correlation.hpp"
#include "glknot/data_matrix.hpp"
#include "glknot/knots.hpp"
#include "glknot/montecarlo.hpp"
#include "glknot/nulltheory.hpp"
#include "glknot/slink.hpp"
#include "glknot/testing.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw glknot::parse_error("cannot open output file: " + path);
  out << content;
}

glknot::KnotSequence knots_from_csv(const std::string& input, bool has_header) {
  const auto data = glknot::standardize(glknot::load_csv(input, has_header));
  return glknot::knot_sequence(glknot::ordered_edges(glknot::correlation_matrix(data)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive testing along the connected-component knots of the "
               "graphical-lasso path"};
  app.require_subcommand(1);

  std::string input, output;
  bool has_header = false;
  double alpha = 0.05;
  std::optional<int> known_m;
  long nn = 500;
  long pp = 100;
  int grid_points = 200;
  bool newick = false;

  auto* cmd_test = app.add_subcommand("test", "knot statistics and p-values for a CSV");
  cmd_test->add_option("--input", input)->required();
  cmd_test->add_flag("--has-header", has_header);
  cmd_test->add_option("--alpha", alpha);
  cmd_test->add_option("--known-m", known_m,
                       "last signal step, enables exact later-step p-values");
  cmd_test->add_option("--output", output);

  auto* cmd_knots = app.add_subcommand("knots", "knot sequence JSON for a CSV");
  cmd_knots->add_option("--input", input)->required();
  cmd_knots->add_flag("--has-header", has_header);
  cmd_knots->add_option("--output", output);

  auto* cmd_cluster = app.add_subcommand("cluster", "single-linkage dendrogram");
  cmd_cluster->add_option("--input", input)->required();
  cmd_cluster->add_flag("--has-header", has_header);
  cmd_cluster->add_flag("--newick", newick, "emit Newick instead of JSON");
  cmd_cluster->add_option("--output", output);

  auto* cmd_null = app.add_subcommand("nulltable",
                                      "CSV table of the null marginal functions");
  cmd_null->add_option("--n", nn)->required();
  cmd_null->add_option("--p", pp);
  cmd_null->add_option("--grid-points", grid_points);
  cmd_null->add_option("--output", output);

  glknot::Scenario sc;
  std::string kind_name = "global_null";
  std::string sim_input;
  auto* cmd_sim = app.add_subcommand("simulate", "replicated null-behavior study");
  cmd_sim->add_option("--kind", kind_name,
                      "global_null|disconnected_pairs|clique|tied_pairs|augmented_real");
  cmd_sim->add_option("--n", sc.n);
  cmd_sim->add_option("--p", sc.p);
  cmd_sim->add_option("--reps", sc.reps);
  cmd_sim->add_option("--seed", sc.seed);
  cmd_sim->add_option("--signal-size", sc.signal_size);
  cmd_sim->add_option("--signal-strength", sc.signal_strength);
  cmd_sim->add_option("--max-null-steps", sc.max_null_steps);
  cmd_sim->add_option("--input", sim_input, "base CSV for augmented_real");
  cmd_sim->add_flag("--has-header", has_header);
  cmd_sim->add_option("--output", output, "prefix for <prefix>.csv and <prefix>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (cmd_test->parsed()) {
      const auto ks = knots_from_csv(input, has_header);
      auto report = glknot::p_values(glknot::test_statistics(ks), known_m);
      std::string body = glknot::report_to_csv(report);
      const auto stop = glknot::sequential_stop(report, alpha);
      body += stop ? "# first step with p > " + std::to_string(alpha) + ": " +
                         std::to_string(*stop) + "\n"
                   : "# no step with p > " + std::to_string(alpha) + "\n";
      write_output(output, body);
    } else if (cmd_knots->parsed()) {
      write_output(output, glknot::knots_to_json(knots_from_csv(input, has_header)) + "\n");
    } else if (cmd_cluster->parsed()) {
      const auto data = glknot::standardize(glknot::load_csv(input, has_header));
      const auto dend =
          glknot::single_linkage(glknot::correlation_matrix(data));
      write_output(output, newick
                               ? glknot::dendrogram_to_newick(dend, data.column_names) + "\n"
                               : glknot::dendrogram_to_json(dend) + "\n");
    } else if (cmd_null->parsed()) {
      glknot::NullMarginal nm(nn);
      std::ostringstream os;
      os.precision(17);
      os << "x,f_n,Fbar_n,mills_lower,mills_upper,chen_stein_max_cdf\n";
      const double hi = nm.support_max();
      for (int g = 1; g < grid_points; ++g) {
        const double x = hi * static_cast<double>(g) / grid_points;
        const auto mb = nm.mills_bounds(x);
        os << x << ',' << nm.density(x) << ',' << nm.tail(x) << ',';
        if (mb.lower) os << *mb.lower;
        os << ',' << mb.upper << ',' << nm.max_cdf_chen_stein(pp, x) << '\n';
      }
      write_output(output, os.str());
    } else if (cmd_sim->parsed()) {
      sc.kind = glknot::parse_scenario_kind(kind_name);
      if (sc.kind == glknot::ScenarioKind::augmented_real) {
        if (sim_input.empty())
          throw glknot::dimension_error("augmented_real requires --input");
        sc.base_data = glknot::load_csv(sim_input, has_header);
      }
      const auto result = glknot::run(sc);
      if (output.empty() || output == "-") {
        std::cout << glknot::summary_to_json(sc, result) << '\n';
      } else {
        write_output(output + ".csv", glknot::result_to_csv(result));
        write_output(output + ".json", glknot::summary_to_json(sc, result) + "\n");
      }
    }
  } catch (const glknot::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

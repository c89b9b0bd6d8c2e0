#ifndef GLKNOT_MONTECARLO_HPP
#define GLKNOT_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glknot/data_matrix.hpp"
#include "glknot/testing.hpp"

namespace glknot {

enum class ScenarioKind {
  global_null,         // X_i i.i.d. N(0, I_p)
  disconnected_pairs,  // signal variables paired, distinct pair strengths
  clique,              // equicorrelated signal block
  tied_pairs,          // three pairs with identical true correlation
  augmented_real       // subsampled real data plus Gaussian noise columns
};

ScenarioKind parse_scenario_kind(const std::string& name);
std::string to_string(ScenarioKind kind);

struct Scenario {
  ScenarioKind kind = ScenarioKind::global_null;
  Eigen::Index n = 500;
  Eigen::Index p = 100;
  int signal_size = 6;          // |A|, for pairs/clique/tied
  double signal_strength = 0.8; // target correlation magnitude
  int reps = 1000;
  std::uint64_t seed = 1;
  int max_null_steps = 10;      // statistics collected per replication
  std::optional<DataMatrix> base_data;  // required for augmented_real

  void validate() const;
  /// True correlation matrix of the scenario's signal block layout.
  /// For disconnected_pairs, pair j has strength signal_strength - 0.1 j.
  Eigen::MatrixXd signal_block() const;
};

struct StepSummary {
  int k;           // 1-based null-step index
  int count;
  double mean;
  double se;
  double ci_lo;    // 95% normal interval
  double ci_hi;
  double ks_d;     // KS distance of samples against Exp(mean 1/k)
  bool ks_pass;    // at the 1% level
};

struct KsResult {
  double d;
  bool pass_at_1pct;
};

struct SimulationResult {
  // reps x K statistics aligned by null-step index; NaN when the path
  // ran out of knots before K null steps (does not occur at desk scale)
  Eigen::MatrixXd t_aligned;
  std::vector<int> first_noise_step;  // 1-based step of first edge outside AxA
  std::vector<char> event_b;          // signal variables selected first
  // top-2 is the finite-sample conditioning event; the top-6 version is
  // asymptotic and still rare at desk scale, reported for inspection
  std::vector<char> top2_disjoint;    // top 2 |S_ij| share no indices
  std::vector<char> top6_disjoint;    // top 6 |S_ij| share no indices
  std::vector<double> first_null_pvalues;
  std::vector<StepSummary> summaries;
  std::vector<std::vector<std::pair<double, double>>> qq;  // per step
};

/// Deterministic per-replication data generation: the generator state
/// derives from hash(seed, rep), so results are order-independent.
DataMatrix generate(const Scenario& s, int rep);

/// Full replication loop: generate, standardize, correlate, extract
/// knots, compute statistics, align by null-step index, aggregate.
SimulationResult run(const Scenario& s);

/// One-sample Kolmogorov-Smirnov sup-distance against Exp(mean mu)
/// with the asymptotic 1% critical value.  Requires >= 20 samples.
KsResult ks_distance(const std::vector<double>& samples, double mu);

/// One-sample KS against the uniform distribution on (0, 1).
KsResult ks_uniform(const std::vector<double>& samples);

/// Sorted empirical values paired with Exp(mean mu) theoretical
/// quantiles at plotting positions (i - 0.5)/N.
std::vector<std::pair<double, double>> qq_points(const std::vector<double>& samples,
                                                 double mu = 1.0);

/// One row per (rep, null step): rep, k, t.
std::string result_to_csv(const SimulationResult& r);
std::string summary_to_json(const Scenario& s, const SimulationResult& r);

}  // namespace glknot

#endif

#include "glknot/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/Cholesky>
#include <nlohmann/json.hpp>

#include "glknot/correlation.hpp"
#include "glknot/nulltheory.hpp"

namespace glknot {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-replication generator state; independent of evaluation order.
std::mt19937_64 rep_rng(std::uint64_t seed, int rep, std::uint64_t stream) {
  return std::mt19937_64(
      splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(rep) + 1) ^
                 splitmix64(stream + 0x51AB2E9D)));
}

// spacing between disconnected-pair strengths, keeps them distinct
constexpr double kPairStrengthStep = 0.1;

void parallel_for(int count, const std::function<void(int)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || count < 8) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  const unsigned workers = std::min<unsigned>(hw, 8);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers))
        body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

ScenarioKind parse_scenario_kind(const std::string& name) {
  if (name == "global_null") return ScenarioKind::global_null;
  if (name == "disconnected_pairs") return ScenarioKind::disconnected_pairs;
  if (name == "clique") return ScenarioKind::clique;
  if (name == "tied_pairs") return ScenarioKind::tied_pairs;
  if (name == "augmented_real") return ScenarioKind::augmented_real;
  throw dimension_error("unknown scenario kind: " + name);
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::global_null: return "global_null";
    case ScenarioKind::disconnected_pairs: return "disconnected_pairs";
    case ScenarioKind::clique: return "clique";
    case ScenarioKind::tied_pairs: return "tied_pairs";
    case ScenarioKind::augmented_real: return "augmented_real";
  }
  return "unknown";
}

void Scenario::validate() const {
  if (n < 3) throw dimension_error("scenario requires n >= 3");
  if (p < 2) throw dimension_error("scenario requires p >= 2");
  if (reps < 1) throw dimension_error("scenario requires reps >= 1");
  switch (kind) {
    case ScenarioKind::global_null:
      break;
    case ScenarioKind::disconnected_pairs:
    case ScenarioKind::tied_pairs: {
      if (signal_size < 2 || signal_size % 2 != 0)
        throw dimension_error("paired scenarios need an even signal_size >= 2");
      if (signal_size > p) throw dimension_error("signal_size exceeds p");
      const int npairs = signal_size / 2;
      const double weakest =
          kind == ScenarioKind::disconnected_pairs
              ? signal_strength - kPairStrengthStep * (npairs - 1)
              : signal_strength;
      if (signal_strength >= 1.0 || weakest <= 0.0)
        throw dimension_error("pair strengths must stay inside (0, 1)");
      break;
    }
    case ScenarioKind::clique:
      if (signal_size < 2 || signal_size > p)
        throw dimension_error("clique scenario needs 2 <= signal_size <= p");
      if (signal_strength <= 0.0 || signal_strength >= 1.0)
        throw dimension_error("clique correlation must lie in (0, 1)");
      break;
    case ScenarioKind::augmented_real:
      if (!base_data) throw dimension_error("augmented_real needs base data");
      if (n > base_data->n())
        throw dimension_error("subsample size exceeds base data rows");
      if (p < base_data->p())
        throw dimension_error("p must be >= base data column count");
      break;
  }
}

Eigen::MatrixXd Scenario::signal_block() const {
  const int a = kind == ScenarioKind::augmented_real
                    ? static_cast<int>(base_data->p())
                    : signal_size;
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(a, a);
  if (kind == ScenarioKind::disconnected_pairs || kind == ScenarioKind::tied_pairs) {
    for (int j = 0; j < a / 2; ++j) {
      const double r = kind == ScenarioKind::disconnected_pairs
                           ? signal_strength - kPairStrengthStep * j
                           : signal_strength;
      sigma(2 * j, 2 * j + 1) = sigma(2 * j + 1, 2 * j) = r;
    }
  } else if (kind == ScenarioKind::clique) {
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j)
        if (i != j) sigma(i, j) = signal_strength;
  }
  return sigma;
}

DataMatrix generate(const Scenario& s, int rep) {
  s.validate();
  std::mt19937_64 rng = rep_rng(s.seed, rep, 0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  if (s.kind == ScenarioKind::augmented_real) {
    const std::uint64_t sub_seed = splitmix64(s.seed ^ splitmix64(rep + 101));
    const std::uint64_t noise_seed = splitmix64(s.seed ^ splitmix64(rep + 202));
    DataMatrix sub = subsample_rows(*s.base_data, s.n, sub_seed);
    return augment_noise(sub, s.p - s.base_data->p(), noise_seed);
  }

  Eigen::MatrixXd x(s.n, s.p);
  for (Eigen::Index j = 0; j < s.p; ++j)
    for (Eigen::Index i = 0; i < s.n; ++i) x(i, j) = gauss(rng);

  if (s.kind != ScenarioKind::global_null) {
    // color the signal block by a symmetric factor of its covariance
    const Eigen::MatrixXd sigma = s.signal_block();
    const int a = static_cast<int>(sigma.rows());
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    if (llt.info() != Eigen::Success)
      throw dimension_error("signal covariance is not positive definite");
    Eigen::MatrixXd l = llt.matrixL();
    x.leftCols(a) = (x.leftCols(a) * l.transpose()).eval();
  }
  return make_data_matrix(std::move(x));
}

KsResult ks_distance(const std::vector<double>& samples, double mu) {
  if (samples.size() < 20)
    throw dimension_error("KS distance needs at least 20 samples");
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double nd = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = 1.0 - exp_survival(mu, std::max(sorted[i], 0.0));
    const double id = static_cast<double>(i);
    d = std::max({d, cdf - id / nd, (id + 1.0) / nd - cdf});
  }
  // asymptotic critical value of the Kolmogorov distribution at 1%
  const double crit = 1.62762;
  const double scaled = d * (std::sqrt(nd) + 0.12 + 0.11 / std::sqrt(nd));
  return KsResult{d, scaled < crit};
}

KsResult ks_uniform(const std::vector<double>& samples) {
  if (samples.size() < 20)
    throw dimension_error("KS distance needs at least 20 samples");
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double nd = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = std::clamp(sorted[i], 0.0, 1.0);
    const double id = static_cast<double>(i);
    d = std::max({d, cdf - id / nd, (id + 1.0) / nd - cdf});
  }
  const double crit = 1.62762;
  const double scaled = d * (std::sqrt(nd) + 0.12 + 0.11 / std::sqrt(nd));
  return KsResult{d, scaled < crit};
}

std::vector<std::pair<double, double>> qq_points(const std::vector<double>& samples,
                                                 double mu) {
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double nd = static_cast<double>(sorted.size());
  std::vector<std::pair<double, double>> out;
  out.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double q = (static_cast<double>(i) + 0.5) / nd;
    out.emplace_back(-mu * std::log1p(-q), sorted[i]);
  }
  return out;
}

SimulationResult run(const Scenario& s) {
  s.validate();
  const int reps = s.reps;
  const int K = s.max_null_steps;
  const int a = s.kind == ScenarioKind::global_null
                    ? 0
                    : (s.kind == ScenarioKind::augmented_real
                           ? static_cast<int>(s.base_data->p())
                           : s.signal_size);

  SimulationResult r;
  r.t_aligned = Eigen::MatrixXd::Constant(reps, K, std::nan(""));
  r.first_noise_step.assign(static_cast<std::size_t>(reps), 0);
  r.event_b.assign(static_cast<std::size_t>(reps), 0);
  r.top2_disjoint.assign(static_cast<std::size_t>(reps), 0);
  r.top6_disjoint.assign(static_cast<std::size_t>(reps), 0);
  r.first_null_pvalues.assign(static_cast<std::size_t>(reps),
                              std::nan(""));

  parallel_for(reps, [&](int rep) {
    const DataMatrix d = standardize(generate(s, rep));
    const CorrelationMatrix c = correlation_matrix(d);
    const OrderedEdges e = ordered_edges(c);
    const KnotSequence ks = knot_sequence(e);
    const TestReport tr = test_statistics(ks);

    if (e.edges.size() >= 2) {
      const Edge& e0 = e.edges[0];
      const Edge& e1 = e.edges[1];
      r.top2_disjoint[static_cast<std::size_t>(rep)] =
          e0.i != e1.i && e0.i != e1.j && e0.j != e1.i && e0.j != e1.j;
    }

    // top-6 order statistics of |S_ij| share no indices
    if (e.edges.size() >= 6) {
      std::vector<int> ids;
      for (int t = 0; t < 6; ++t) {
        ids.push_back(e.edges[static_cast<std::size_t>(t)].i);
        ids.push_back(e.edges[static_cast<std::size_t>(t)].j);
      }
      std::sort(ids.begin(), ids.end());
      r.top6_disjoint[static_cast<std::size_t>(rep)] =
          std::adjacent_find(ids.begin(), ids.end()) == ids.end();
    }

    // first accepted knot whose edge leaves the A x A block
    int first_noise = ks.M() + 1;
    for (int t = 0; t < ks.M(); ++t) {
      const Knot& kn = ks.knots[static_cast<std::size_t>(t)];
      if (kn.i >= a || kn.j >= a) {
        first_noise = t + 1;
        break;
      }
    }
    r.first_noise_step[static_cast<std::size_t>(rep)] = first_noise;
    const int m = first_noise - 1;

    if (a > 0) {
      // event B: every signal variable is connected inside A x A
      // before any edge leaves the block
      std::vector<char> covered(static_cast<std::size_t>(a), 0);
      for (int t = 0; t < m; ++t) {
        covered[static_cast<std::size_t>(ks.knots[static_cast<std::size_t>(t)].i)] = 1;
        covered[static_cast<std::size_t>(ks.knots[static_cast<std::size_t>(t)].j)] = 1;
      }
      r.event_b[static_cast<std::size_t>(rep)] =
          std::all_of(covered.begin(), covered.end(), [](char v) { return v != 0; });
    } else {
      r.event_b[static_cast<std::size_t>(rep)] = 1;
    }

    for (int j = 1; j <= K; ++j) {
      const int k = m + j;
      if (k >= 1 && k <= static_cast<int>(tr.steps.size()))
        r.t_aligned(rep, j - 1) = tr.steps[static_cast<std::size_t>(k - 1)].t;
    }
    if (std::isfinite(r.t_aligned(rep, 0)))
      r.first_null_pvalues[static_cast<std::size_t>(rep)] =
          std::exp(-r.t_aligned(rep, 0));
  });

  for (int j = 1; j <= K; ++j) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(reps));
    for (int rep = 0; rep < reps; ++rep)
      if (std::isfinite(r.t_aligned(rep, j - 1)))
        samples.push_back(r.t_aligned(rep, j - 1));
    StepSummary ss{};
    ss.k = j;
    ss.count = static_cast<int>(samples.size());
    if (!samples.empty()) {
      double sum = 0.0;
      for (double v : samples) sum += v;
      ss.mean = sum / static_cast<double>(samples.size());
      double ssq = 0.0;
      for (double v : samples) ssq += (v - ss.mean) * (v - ss.mean);
      const double sd = samples.size() > 1
                            ? std::sqrt(ssq / static_cast<double>(samples.size() - 1))
                            : 0.0;
      ss.se = sd / std::sqrt(static_cast<double>(samples.size()));
      ss.ci_lo = ss.mean - 1.96 * ss.se;
      ss.ci_hi = ss.mean + 1.96 * ss.se;
      if (samples.size() >= 20) {
        const KsResult ks = ks_distance(samples, 1.0 / static_cast<double>(j));
        ss.ks_d = ks.d;
        ss.ks_pass = ks.pass_at_1pct;
      }
    }
    r.summaries.push_back(ss);
    r.qq.push_back(qq_points(samples));
  }
  return r;
}

std::string result_to_csv(const SimulationResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << "rep,null_step,t\n";
  for (Eigen::Index rep = 0; rep < r.t_aligned.rows(); ++rep)
    for (Eigen::Index j = 0; j < r.t_aligned.cols(); ++j)
      if (std::isfinite(r.t_aligned(rep, j)))
        os << rep << ',' << (j + 1) << ',' << r.t_aligned(rep, j) << '\n';
  return os.str();
}

std::string summary_to_json(const Scenario& s, const SimulationResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const StepSummary& ss : r.summaries)
    steps.push_back({{"k", ss.k},
                     {"count", ss.count},
                     {"mean", ss.mean},
                     {"se", ss.se},
                     {"ci_lo", ss.ci_lo},
                     {"ci_hi", ss.ci_hi},
                     {"ks_d", ss.ks_d},
                     {"ks_pass_1pct", ss.ks_pass}});
  double b = 0.0, disj = 0.0, disj2 = 0.0;
  for (char v : r.event_b) b += v;
  for (char v : r.top6_disjoint) disj += v;
  for (char v : r.top2_disjoint) disj2 += v;
  const double reps = static_cast<double>(r.event_b.size());
  nlohmann::json out = {{"kind", to_string(s.kind)},
                        {"n", s.n},
                        {"p", s.p},
                        {"signal_size", s.signal_size},
                        {"signal_strength", s.signal_strength},
                        {"reps", s.reps},
                        {"seed", s.seed},
                        {"steps", steps},
                        {"freq_event_b", b / reps},
                        {"freq_top2_disjoint", disj2 / reps},
                        {"freq_top6_disjoint", disj / reps}};
  if (!r.first_null_pvalues.empty()) {
    std::vector<double> pv;
    for (double v : r.first_null_pvalues)
      if (std::isfinite(v)) pv.push_back(v);
    if (pv.size() >= 20) {
      const KsResult ks = ks_uniform(pv);
      out["first_null_pvalue_ks_d"] = ks.d;
      out["first_null_pvalue_ks_pass_1pct"] = ks.pass_at_1pct;
    }
  }
  return out.dump(2);
}

}  // namespace glknot

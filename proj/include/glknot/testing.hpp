#ifndef GLKNOT_TESTING_HPP
#define GLKNOT_TESTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "glknot/knots.hpp"

namespace glknot {

/// One tested step along the knot sequence.
struct TestStep {
  int k;                // 1-based step index
  double rho_k;
  double rho_k1;        // next knot value
  double t;             // n * rho_k * (rho_k - rho_k1)
  double p_conservative;                 // Exp(mean 1) survival at t
  std::optional<double> p_exact_given_m; // Exp(mean 1/(k-m)) survival, k > m
};

struct TestReport {
  std::vector<TestStep> steps;  // k = 1..M-1; the last knot has no statistic
  Eigen::Index n = 0;
  std::optional<int> m;         // known last-signal step, when provided
};

/// T_k = n rho_k (rho_k - rho_{k+1}) for k = 1..M-1 with conservative
/// Exp(mean 1) p-values.  Requires M >= 2.
TestReport test_statistics(const KnotSequence& ks);

/// Attach exact p-values given the last signal step m (0 <= m < M):
/// step k > m compares k*T... i.e. uses Exp(mean 1/(k-m)) survival.
TestReport p_values(const TestReport& tr, std::optional<int> m);

/// Smallest k whose conservative p-value exceeds alpha, or nullopt.
/// Heuristic stopping rule, not a proven procedure.
std::optional<int> sequential_stop(const TestReport& tr, double alpha);

/// CSV rows: k, rho_k, rho_k1, t, p_conservative, p_exact_given_m.
std::string report_to_csv(const TestReport& tr);
std::string report_to_json(const TestReport& tr);

}  // namespace glknot

#endif

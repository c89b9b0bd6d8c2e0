// Monte Carlo cross-checks of the analytic null-distribution results.
// These are slower than the unit tests and use loose statistical
// tolerances; seeds are fixed so the suite is deterministic.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "glknot/nulltheory.hpp"

using namespace glknot;

namespace {

// Sample correlation matrix of an n x p matrix of independent normals.
Eigen::MatrixXd null_correlation(Eigen::Index n, Eigen::Index p,
                                 std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) x(i, j) = g(rng);
  x.rowwise() -= x.colwise().mean();
  for (Eigen::Index j = 0; j < p; ++j) x.col(j) /= x.col(j).norm();
  return x.transpose() * x;
}

double max_offdiag_abs(const Eigen::MatrixXd& s) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = i + 1; j < s.cols(); ++j)
      m = std::max(m, std::abs(s(i, j)));
  return m;
}

}  // namespace

TEST_CASE("tail matches the empirical law of a single null correlation") {
  const long n = 20;
  const int reps = 1000000;
  NullMarginal nm(n);
  std::mt19937_64 rng(424242);
  std::normal_distribution<double> g;
  const std::vector<double> xs = {1.0, 2.0, 3.0};
  std::vector<long> hits(xs.size(), 0);
  Eigen::VectorXd a(n), b(n);
  for (int r = 0; r < reps; ++r) {
    for (long i = 0; i < n; ++i) {
      a(i) = g(rng);
      b(i) = g(rng);
    }
    a.array() -= a.mean();
    b.array() -= b.mean();
    const double scaled =
        std::sqrt(static_cast<double>(n)) * std::abs(a.dot(b)) / (a.norm() * b.norm());
    for (std::size_t q = 0; q < xs.size(); ++q)
      if (scaled > xs[q]) ++hits[q];
  }
  for (std::size_t q = 0; q < xs.size(); ++q) {
    const double want = nm.tail(xs[q]);
    const double freq = static_cast<double>(hits[q]) / reps;
    const double se = std::sqrt(want * (1.0 - want) / reps);
    CHECK(std::abs(freq - want) < 3.0 * se + 1e-6);
  }
}

TEST_CASE("Chen-Stein tracks the empirical maximum CDF") {
  const Eigen::Index n = 50, p = 20;
  const int reps = 100000;
  NullMarginal nm(n);
  std::mt19937_64 rng(1729);
  std::vector<double> maxima(reps);
  for (int r = 0; r < reps; ++r)
    maxima[static_cast<std::size_t>(r)] =
        std::sqrt(static_cast<double>(n)) * max_offdiag_abs(null_correlation(n, p, rng));
  std::sort(maxima.begin(), maxima.end());
  for (double q : {0.25, 0.5, 0.75}) {
    const double xq = maxima[static_cast<std::size_t>(q * reps)];
    CHECK(std::abs(nm.max_cdf_chen_stein(p, xq) - q) < 0.02);
  }
}

TEST_CASE("max-probability bound dominates the empirical frequency") {
  const Eigen::Index n = 500, p = 100;
  const int reps = 10000;
  std::mt19937_64 rng(8675309);
  const double threshold = std::sqrt(std::log(static_cast<double>(p)));
  long below = 0;
  for (int r = 0; r < reps; ++r) {
    const double m =
        std::sqrt(static_cast<double>(n)) * max_offdiag_abs(null_correlation(n, p, rng));
    if (m < threshold) ++below;
  }
  const double freq = static_cast<double>(below) / reps;
  const double se = std::sqrt(std::max(freq, 1.0 / reps) * 1.0 / reps);
  CHECK(freq <= max_prob_lower_bound(p) + 3.0 * se);
}

TEST_CASE("Chebyshev count bound dominates the empirical frequency") {
  const Eigen::Index n = 500, p = 50;
  const long k = 3;
  const int reps = 10000;
  NullMarginal nm(n);
  const double x = std::sqrt(2.0 * std::log(static_cast<double>(p)));
  const double cutoff = x / std::sqrt(static_cast<double>(n));
  std::mt19937_64 rng(55555);
  long few = 0;
  for (int r = 0; r < reps; ++r) {
    auto s = null_correlation(n, p, rng);
    long count = 0;
    for (Eigen::Index i = 0; i < p; ++i)
      for (Eigen::Index j = i + 1; j < p; ++j)
        if (std::abs(s(i, j)) > cutoff) ++count;
    if (count < k) ++few;
  }
  const double freq = static_cast<double>(few) / reps;
  const double se = std::sqrt(std::max(freq, 1.0 / reps) / reps);
  CHECK(freq <= nm.chebyshev_count_bound(p, x, k) + 3.0 * se);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "glknot/knots.hpp"
#include "oracles.hpp"

using namespace glknot;

namespace {

CorrelationMatrix random_correlation(int p, int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) x(i, j) = g(rng);
  x.rowwise() -= x.colwise().mean();
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      s(i, j) = s(j, i) =
          x.col(i).dot(x.col(j)) / (x.col(i).norm() * x.col(j).norm());
  CorrelationMatrix c;
  c.s = std::move(s);
  c.n = n;
  return c;
}

bool same_sequence(const KnotSequence& a, const KnotSequence& b) {
  if (a.M() != b.M()) return false;
  for (int t = 0; t < a.M(); ++t) {
    const Knot &x = a.knots[t], &y = b.knots[t];
    if (x.rho != y.rho || x.i != y.i || x.j != y.j ||
        x.components_before != y.components_before ||
        x.components_after != y.components_after)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("single pair gives one knot") {
  CorrelationMatrix c;
  c.n = 10;
  c.s = Eigen::MatrixXd::Identity(2, 2);
  c.s(0, 1) = c.s(1, 0) = 0.5;
  auto ks = knot_sequence(ordered_edges(c));
  CHECK(ks.M() == 1);
  CHECK(ks.knots[0].rho == 0.5);
  CHECK(ks.knots[0].components_before == 2);
  CHECK(ks.knots[0].components_after == 1);
  CHECK(same_sequence(ks, knot_sequence_bruteforce(ordered_edges(c))));
}

TEST_CASE("third edge of a triangle is eliminated") {
  CorrelationMatrix c;
  c.n = 10;
  c.s = Eigen::MatrixXd::Identity(3, 3);
  c.s(0, 1) = c.s(1, 0) = 0.9;
  c.s(0, 2) = c.s(2, 0) = 0.8;
  c.s(1, 2) = c.s(2, 1) = 0.7;
  auto ks = knot_sequence(ordered_edges(c));
  REQUIRE(ks.M() == 2);
  CHECK(ks.knots[0].rho == 0.9);
  CHECK(ks.knots[1].rho == 0.8);
  CHECK(ks.knots[1].i == 0);
  CHECK(ks.knots[1].j == 2);
}

TEST_CASE("agrees with the brute-force scan on random instances") {
  std::mt19937_64 pick(99);
  for (int it = 0; it < 1000; ++it) {
    const int p = 3 + static_cast<int>(pick() % 10);  // p in 3..12
    auto c = random_correlation(p, 15, static_cast<unsigned>(1000 + it));
    auto e = ordered_edges(c);
    CHECK(same_sequence(knot_sequence(e), knot_sequence_bruteforce(e)));
  }
}

TEST_CASE("accepted edges form the maximum spanning tree (Kruskal oracle)") {
  for (int it = 0; it < 200; ++it) {
    const int p = 3 + it % 10;
    auto c = random_correlation(p, 12, static_cast<unsigned>(7000 + it));
    auto ks = knot_sequence(ordered_edges(c));
    auto oracle = oracles::kruskal_max_forest(c.s.cwiseAbs());
    REQUIRE(ks.M() == static_cast<int>(oracle.size()));
    for (int t = 0; t < ks.M(); ++t) {
      CHECK(ks.knots[t].i == oracle[t].i);
      CHECK(ks.knots[t].j == oracle[t].j);
      CHECK(ks.knots[t].rho == oracle[t].w);
    }
  }
}

TEST_CASE("knot weight total matches exhaustive tree enumeration, p <= 7") {
  for (int it = 0; it < 40; ++it) {
    const int p = 3 + it % 5;  // 3..7
    auto c = random_correlation(p, 10, static_cast<unsigned>(300 + it));
    auto ks = knot_sequence(ordered_edges(c));
    REQUIRE(ks.M() == p - 1);
    double total = 0.0;
    for (const auto& kn : ks.knots) total += kn.rho;
    CHECK(total == doctest::Approx(oracles::max_tree_weight_exhaustive(c.s.cwiseAbs()))
                       .epsilon(1e-12));
  }
}

TEST_CASE("knot properties: monotone values, component count, forest") {
  auto c = random_correlation(9, 20, 555);
  auto e = ordered_edges(c);
  auto ks = knot_sequence(e);
  CHECK(ks.M() == 8);  // all correlations nonzero a.s.
  for (int t = 0; t < ks.M(); ++t) {
    if (t > 0) CHECK(ks.knots[t - 1].rho >= ks.knots[t].rho);
    CHECK(ks.knots[t].components_before == 9 - t);
    CHECK(ks.knots[t].components_after == 8 - t);
  }
  // knot values are a sub-multiset of the edge values
  for (const auto& kn : ks.knots) {
    bool found = false;
    for (const auto& ed : e.edges)
      if (ed.value == kn.rho && ed.i == kn.i && ed.j == kn.j) found = true;
    CHECK(found);
  }
}

TEST_CASE("ties handled identically by both implementations") {
  CorrelationMatrix c;
  c.n = 6;
  c.s = Eigen::MatrixXd::Identity(4, 4);
  auto set = [&](int i, int j, double v) { c.s(i, j) = c.s(j, i) = v; };
  set(0, 1, 0.6);
  set(2, 3, 0.6);
  set(0, 2, 0.6);
  set(1, 3, 0.2);
  set(0, 3, 0.1);
  set(1, 2, 0.05);
  auto e = ordered_edges(c);
  auto a = knot_sequence(e);
  auto b = knot_sequence_bruteforce(e);
  CHECK(same_sequence(a, b));
  CHECK(a.M() == 3);
}

TEST_CASE("components_at slices the merge history") {
  CorrelationMatrix c;
  c.n = 10;
  c.s = Eigen::MatrixXd::Identity(3, 3);
  c.s(0, 1) = c.s(1, 0) = 0.9;
  c.s(0, 2) = c.s(2, 0) = 0.8;
  c.s(1, 2) = c.s(2, 1) = 0.7;
  auto ks = knot_sequence(ordered_edges(c));
  auto above = components_at(ks, 0.95);
  CHECK(above == std::vector<std::vector<int>>{{0}, {1}, {2}});
  auto mid = components_at(ks, 0.85);
  CHECK(mid == std::vector<std::vector<int>>{{0, 1}, {2}});
  auto below = components_at(ks, 0.5);
  CHECK(below == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("knots_to_json lists every accepted knot") {
  auto c = random_correlation(4, 8, 12);
  auto ks = knot_sequence(ordered_edges(c));
  auto json = knots_to_json(ks);
  CHECK(json.find("\"M\": 3") != std::string::npos);
  CHECK(json.find("components_after") != std::string::npos);
}

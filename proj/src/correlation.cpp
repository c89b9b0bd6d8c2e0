#include "glknot/correlation.hpp"

#include <algorithm>
#include <cmath>

namespace glknot {

CorrelationMatrix correlation_matrix(const DataMatrix& d) {
  const auto n = d.n();
  const auto p = d.p();
  Eigen::MatrixXd centered = d.values;
  centered.rowwise() -= centered.colwise().mean();
  Eigen::VectorXd norms = centered.colwise().norm();
  for (Eigen::Index j = 0; j < p; ++j)
    if (norms(j) == 0.0) {
      std::string name = d.column_names.empty()
                             ? std::to_string(j)
                             : d.column_names[static_cast<std::size_t>(j)];
      throw degenerate_column_error("column " + name + " has zero variance");
    }

  Eigen::MatrixXd s = centered.transpose() * centered;
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < p; ++j)
      s(i, j) = std::clamp(s(i, j) / (norms(i) * norms(j)), -1.0, 1.0);
  s.diagonal().setOnes();
  // enforce exact symmetry against rounding in the product
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = i + 1; j < p; ++j) s(j, i) = s(i, j);
  return CorrelationMatrix{std::move(s), n};
}

OrderedEdges ordered_edges(const CorrelationMatrix& c) {
  const auto p = c.p();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * (p - 1) / 2));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      edges.push_back(Edge{std::abs(c.s(i, j)), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  return OrderedEdges{std::move(edges), p, c.n};
}

}  // namespace glknot

#ifndef GLKNOT_CORRELATION_HPP
#define GLKNOT_CORRELATION_HPP

#include <vector>

#include <Eigen/Dense>

#include "glknot/data_matrix.hpp"

namespace glknot {

/// Sample correlation matrix with the sample size that produced it.
/// Symmetric, unit diagonal, entries clamped to [-1, 1].
struct CorrelationMatrix {
  Eigen::MatrixXd s;
  Eigen::Index n = 0;

  Eigen::Index p() const { return s.rows(); }
};

/// One off-diagonal entry by absolute value, i < j.
struct Edge {
  double value;
  int i;
  int j;
};

/// All p(p-1)/2 off-diagonal absolute correlations sorted descending,
/// ties broken lexicographically by (i, j).
struct OrderedEdges {
  std::vector<Edge> edges;
  Eigen::Index p = 0;
  Eigen::Index n = 0;
};

/// S_ij = X_i . X_j / (||X_i|| ||X_j||) after centering each column.
/// Diagonal is set to 1 exactly.
CorrelationMatrix correlation_matrix(const DataMatrix& d);

OrderedEdges ordered_edges(const CorrelationMatrix& c);

}  // namespace glknot

#endif

#ifndef GLKNOT_KNOTS_HPP
#define GLKNOT_KNOTS_HPP

#include <string>
#include <vector>

#include "glknot/correlation.hpp"

namespace glknot {

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false if a and b were already in the same component.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    --components_;
    return true;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

/// One accepted knot: a value of |S_ij| at which two previously
/// disconnected variable groups merge.
struct Knot {
  double rho;
  int i;
  int j;
  int components_before;
  int components_after;
};

/// The component-change knot subsequence of the graphical-lasso path,
/// extracted from the descending scan of absolute correlations.
struct KnotSequence {
  std::vector<Knot> knots;
  Eigen::Index p = 0;
  Eigen::Index n = 0;

  int M() const { return static_cast<int>(knots.size()); }
};

/// Scan edges in descending order, accepting an edge iff its endpoints
/// lie in distinct components.  The accepted values are the knots.
KnotSequence knot_sequence(const OrderedEdges& e);

/// Same contract as knot_sequence, implemented by full component
/// recomputation (BFS) per candidate edge.  O(p^4); testing oracle.
KnotSequence knot_sequence_bruteforce(const OrderedEdges& e);

/// Connected components induced by accepted edges with rho strictly
/// greater than the given level.  Each component is sorted; components
/// ordered by smallest member.
std::vector<std::vector<int>> components_at(const KnotSequence& k, double rho);

/// JSON array of {k, rho, i, j, components_after}.
std::string knots_to_json(const KnotSequence& k);

}  // namespace glknot

#endif

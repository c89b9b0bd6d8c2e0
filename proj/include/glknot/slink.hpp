#ifndef GLKNOT_SLINK_HPP
#define GLKNOT_SLINK_HPP

#include <string>
#include <vector>

#include "glknot/correlation.hpp"
#include "glknot/knots.hpp"

namespace glknot {

/// One agglomerative merge at a similarity level.  Node ids: leaves are
/// 0..p-1, merge r creates node p+r.
struct Merge {
  double height;  // absolute correlation at which the groups join
  int left;
  int right;
  int new_node;
};

struct Dendrogram {
  std::vector<Merge> merges;
  Eigen::Index leaves = 0;
};

/// Single-linkage clustering on absolute correlations: groups merge at
/// the largest absolute correlation between them, in descending height
/// order.  The merge heights coincide with the knot sequence.
Dendrogram single_linkage(const CorrelationMatrix& c);

/// Same tree derived from an already-computed knot sequence.
Dendrogram single_linkage(const KnotSequence& k);

std::string dendrogram_to_json(const Dendrogram& d);

/// Newick string with branch lengths on the distance scale 1 - |corr|.
/// Leaves are labeled v0..v{p-1} or by the provided names.
std::string dendrogram_to_newick(const Dendrogram& d,
                                 const std::vector<std::string>& leaf_names = {});

}  // namespace glknot

#endif

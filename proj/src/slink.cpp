#include "glknot/slink.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace glknot {

Dendrogram single_linkage(const KnotSequence& k) {
  const int p = static_cast<int>(k.p);
  UnionFind uf(p);
  // current dendrogram node representing each union-find component
  std::vector<int> node_of_root(static_cast<std::size_t>(p));
  for (int v = 0; v < p; ++v) node_of_root[static_cast<std::size_t>(v)] = v;

  Dendrogram d;
  d.leaves = k.p;
  int next_node = p;
  for (const Knot& kn : k.knots) {
    int ra = uf.find(kn.i), rb = uf.find(kn.j);
    int left = node_of_root[static_cast<std::size_t>(ra)];
    int right = node_of_root[static_cast<std::size_t>(rb)];
    uf.unite(kn.i, kn.j);
    int root = uf.find(kn.i);
    node_of_root[static_cast<std::size_t>(root)] = next_node;
    d.merges.push_back(Merge{kn.rho, left, right, next_node});
    ++next_node;
  }
  return d;
}

Dendrogram single_linkage(const CorrelationMatrix& c) {
  return single_linkage(knot_sequence(ordered_edges(c)));
}

std::string dendrogram_to_json(const Dendrogram& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Merge& m : d.merges)
    arr.push_back({{"height", m.height},
                   {"left", m.left},
                   {"right", m.right},
                   {"new_node", m.new_node}});
  nlohmann::json out = {{"leaves", d.leaves}, {"merges", arr}};
  return out.dump(2);
}

namespace {

struct NewickWriter {
  const Dendrogram& d;
  const std::vector<std::string>& names;
  std::vector<const Merge*> merge_of_node;

  // height on the 1 - |corr| distance scale; leaves sit at 0
  double node_height(int node) const {
    const Merge* m = merge_of_node[static_cast<std::size_t>(node)];
    return m ? 1.0 - m->height : 0.0;
  }

  void write(std::ostream& os, int node, double parent_height) const {
    const Merge* m = merge_of_node[static_cast<std::size_t>(node)];
    const double h = node_height(node);
    if (m) {
      os << '(';
      write(os, m->left, h);
      os << ',';
      write(os, m->right, h);
      os << ')';
    } else {
      if (names.empty())
        os << 'v' << node;
      else
        os << names[static_cast<std::size_t>(node)];
    }
    os << ':' << (parent_height - h);
  }
};

}  // namespace

std::string dendrogram_to_newick(const Dendrogram& d,
                                 const std::vector<std::string>& leaf_names) {
  const int total = static_cast<int>(d.leaves) + static_cast<int>(d.merges.size());
  NewickWriter w{d, leaf_names, std::vector<const Merge*>(static_cast<std::size_t>(total), nullptr)};
  for (const Merge& m : d.merges)
    w.merge_of_node[static_cast<std::size_t>(m.new_node)] = &m;

  // roots: nodes that never appear as a child
  std::vector<char> is_child(static_cast<std::size_t>(total), 0);
  for (const Merge& m : d.merges) {
    is_child[static_cast<std::size_t>(m.left)] = 1;
    is_child[static_cast<std::size_t>(m.right)] = 1;
  }
  std::ostringstream os;
  bool first = true;
  for (int node = 0; node < total; ++node)
    if (!is_child[static_cast<std::size_t>(node)]) {
      if (!first) os << '\n';
      first = false;
      w.write(os, node, w.node_height(node));
      os << ';';
    }
  return os.str();
}

}  // namespace glknot

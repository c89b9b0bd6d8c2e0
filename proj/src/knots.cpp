#include "glknot/knots.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

namespace glknot {

KnotSequence knot_sequence(const OrderedEdges& e) {
  const int p = static_cast<int>(e.p);
  UnionFind uf(p);
  std::vector<Knot> knots;
  knots.reserve(static_cast<std::size_t>(p - 1));
  for (const Edge& ed : e.edges) {
    const int before = uf.components();
    if (uf.unite(ed.i, ed.j))
      knots.push_back(Knot{ed.value, ed.i, ed.j, before, before - 1});
  }
  return KnotSequence{std::move(knots), e.p, e.n};
}

namespace {

// BFS reachability over an adjacency list.
bool reachable(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<char> seen(adj.size(), 0);
  std::queue<int> q;
  q.push(from);
  seen[static_cast<std::size_t>(from)] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == to) return true;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        q.push(w);
      }
  }
  return false;
}

}  // namespace

KnotSequence knot_sequence_bruteforce(const OrderedEdges& e) {
  const int p = static_cast<int>(e.p);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(p));
  std::vector<Knot> knots;
  int components = p;
  for (const Edge& ed : e.edges) {
    if (!reachable(adj, ed.i, ed.j)) {
      knots.push_back(Knot{ed.value, ed.i, ed.j, components, components - 1});
      adj[static_cast<std::size_t>(ed.i)].push_back(ed.j);
      adj[static_cast<std::size_t>(ed.j)].push_back(ed.i);
      --components;
    }
  }
  return KnotSequence{std::move(knots), e.p, e.n};
}

std::vector<std::vector<int>> components_at(const KnotSequence& k, double rho) {
  const int p = static_cast<int>(k.p);
  UnionFind uf(p);
  for (const Knot& kn : k.knots)
    if (kn.rho > rho) uf.unite(kn.i, kn.j);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < p; ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::string knots_to_json(const KnotSequence& k) {
  nlohmann::json arr = nlohmann::json::array();
  int step = 1;
  for (const Knot& kn : k.knots) {
    arr.push_back({{"k", step++},
                   {"rho", kn.rho},
                   {"i", kn.i},
                   {"j", kn.j},
                   {"components_after", kn.components_after}});
  }
  nlohmann::json out = {{"p", k.p}, {"n", k.n}, {"M", k.M()}, {"knots", arr}};
  return out.dump(2);
}

}  // namespace glknot

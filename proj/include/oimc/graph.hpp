#pragma once

#include <vector>

#include "oimc/imc.hpp"
#include "oimc/state_set.hpp"

namespace oimc {

// Plain digraph over dense vertex indices; holds forward and reverse
// adjacency. Built from an IMC's edge relation.
class Digraph {
public:
  explicit Digraph(int n) : adj_(n), radj_(n) {}
  explicit Digraph(const Imc& m);

  int size() const { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v) {
    adj_[u].push_back(v);
    radj_[v].push_back(u);
  }
  const std::vector<int>& successors(int u) const { return adj_[u]; }
  const std::vector<int>& predecessors(int u) const { return radj_[u]; }

private:
  std::vector<std::vector<int>> adj_, radj_;
};

// Vertices with a (possibly empty) path into `target`; reverse BFS, O(V+E).
StateSet can_reach(const Digraph& g, const StateSet& target);

// Strongly connected components of the subgraph induced by `restrict`, as
// state sets. Singletons count as components whether or not they carry a
// self-loop. Output order is deterministic (roots explored by vertex index).
std::vector<StateSet> sccs(const Digraph& g, const StateSet& restrict_to);

}  // namespace oimc

#include "oimc/graph.hpp"

#include <algorithm>

namespace oimc {

Digraph::Digraph(const Imc& m) : Digraph(m.state_count()) {
  for (int s = 0; s < m.state_count(); ++s)
    for (const auto& [t, iv] : m.row(s)) add_edge(s, t);
}

StateSet can_reach(const Digraph& g, const StateSet& target) {
  StateSet seen = target;
  std::vector<int> queue = target.indices();
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int u : g.predecessors(v)) {
      if (!seen.test(u)) {
        seen.set(u);
        queue.push_back(u);
      }
    }
  }
  return seen;
}

namespace {

// Iterative Tarjan over the induced subgraph.
struct TarjanState {
  const Digraph& g;
  const StateSet& restrict_to;
  std::vector<int> index, lowlink, stack;
  std::vector<bool> on_stack;
  int next_index = 0;
  std::vector<StateSet> components;

  TarjanState(const Digraph& g, const StateSet& r)
      : g(g), restrict_to(r), index(g.size(), -1), lowlink(g.size(), 0),
        on_stack(g.size(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      std::size_t next_succ;
    };
    std::vector<Frame> frames{{root, 0}};
    visit(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& succs = g.successors(f.v);
      bool descended = false;
      while (f.next_succ < succs.size()) {
        int w = succs[f.next_succ++];
        if (!restrict_to.test(w)) continue;
        if (index[w] == -1) {
          frames.push_back({w, 0});
          visit(w);
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[f.v] = std::min(lowlink[f.v], index[w]);
      }
      if (descended) continue;
      int v = f.v;
      frames.pop_back();
      if (!frames.empty())
        lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      if (lowlink[v] == index[v]) {
        StateSet comp(g.size());
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.set(w);
        } while (w != v);
        components.push_back(std::move(comp));
      }
    }
  }

  void visit(int v) {
    index[v] = lowlink[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
  }
};

}  // namespace

std::vector<StateSet> sccs(const Digraph& g, const StateSet& restrict_to) {
  TarjanState t(g, restrict_to);
  for (int v : restrict_to.indices())
    if (t.index[v] == -1) t.run(v);
  return t.components;
}

}  // namespace oimc

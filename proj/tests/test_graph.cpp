#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oimc/graph.hpp"

using namespace oimc;

TEST_CASE("reachability on the example graphs") {
  Digraph g1(testing::example1());
  CHECK(can_reach(g1, StateSet::single(2, 1)) == StateSet::all(2));
  CHECK(can_reach(g1, StateSet(2)) == StateSet(2));

  Digraph g2(testing::example2());
  CHECK(can_reach(g2, StateSet::single(3, 0)) == StateSet::of(3, {0, 1}));
  CHECK(can_reach(g2, StateSet::single(3, 2)) == StateSet::all(3));
}

TEST_CASE("strongly connected components of restricted subgraphs") {
  Digraph g2(testing::example2());
  auto comps = sccs(g2, StateSet::of(3, {0, 1}));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == StateSet::of(3, {0, 1}));

  Digraph g1(testing::example1());
  comps = sccs(g1, StateSet::single(2, 0));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == StateSet::single(2, 0));

  // No edges between the two restricted vertices: two singleton components.
  Imc m = testing::make_imc({"a", "b", "c"},
                            {{"a", "c", "[1,1]"}, {"b", "c", "[1,1]"}, {"c", "c", "[1,1]"}});
  comps = sccs(Digraph(m), StateSet::of(3, {0, 1}));
  CHECK(comps.size() == 2);
}

TEST_CASE("sccs partition the restriction") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 80; ++round) {
    int n = 1 + static_cast<int>(rng() % 7);
    Digraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    StateSet restrict_to(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 2) restrict_to.set(v);
    auto comps = sccs(g, restrict_to);
    StateSet seen(n);
    std::size_t total = 0;
    for (const auto& c : comps) {
      CHECK(!c.intersects(seen));
      CHECK(c.is_subset_of(restrict_to));
      seen |= c;
      total += c.count();
    }
    CHECK(seen == restrict_to);
    CHECK(total == restrict_to.count());
  }
}

TEST_CASE("reachability agrees with transitive closure on small graphs") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 120; ++round) {
    int n = 1 + static_cast<int>(rng() % 6);
    Digraph g(n);
    std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u) {
      closure[u][u] = true;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) {
          g.add_edge(u, v);
          closure[u][v] = true;
        }
    }
    for (int k = 0; k < n; ++k)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (closure[u][k] && closure[k][v]) closure[u][v] = true;

    StateSet target(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 2) target.set(v);
    StateSet reach = can_reach(g, target);
    CHECK(target.is_subset_of(reach));  // contains the target itself
    for (int u = 0; u < n; ++u) {
      bool expect = false;
      for (int v : target.indices()) expect |= closure[u][v];
      CHECK(reach.test(u) == expect);
    }
  }
}

TEST_CASE("reachability is monotone in the target") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    Digraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    StateSet small(n), big(n);
    for (int v = 0; v < n; ++v) {
      bool in_big = rng() % 2;
      if (in_big) big.set(v);
      if (in_big && rng() % 2) small.set(v);
    }
    CHECK(can_reach(g, small).is_subset_of(can_reach(g, big)));
  }
}

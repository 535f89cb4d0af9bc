#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oimc/edge_algebra.hpp"
#include "oimc/oracle.hpp"

using namespace oimc;
using testing::example1;
using testing::example2;
using testing::make_imc;

namespace {

EdgeSet edges(std::initializer_list<Edge> items) { return EdgeSet::of(items); }

}  // namespace

TEST_CASE("edge queries on the example 2 chain") {
  Imc m = example2();
  EdgeQuery q(m);
  int s0 = 0, s1 = 1, s2 = 2;

  CHECK(q.edges_from(s1) == edges({{s1, s0}, {s1, s1}, {s1, s2}}));
  CHECK(q.edges_from_to(s1, StateSet::single(3, s2)) == edges({{s1, s2}}));
  CHECK(q.edges_from_to_class(StarClass::PositiveLeft, s1, StateSet::all(3)) ==
        edges({{s1, s0}}));
  CHECK(q.edges_from_to_class(StarClass::ZeroClosedLeft, s1, StateSet::all(3)) ==
        edges({{s1, s1}}));
  CHECK(q.edges_from_to(s0, StateSet::single(3, s2)).empty());
}

TEST_CASE("largeness follows the upper endpoint sum and closure") {
  Imc m = example2();
  // Upper endpoints 0.8 + 0.2 sum to exactly 1 and both are right-closed.
  CHECK(is_large(m, edges({{1, 0}, {1, 2}})));
  CHECK(is_large(m, edges({{1, 0}, {1, 1}, {1, 2}})));  // 1.5 > 1
  CHECK(!is_large(m, edges({{1, 1}, {1, 2}})));         // 0.7 < 1
  CHECK(!is_large(m, EdgeSet{}));

  // Lowering hi(s1,s0) to 0.7 pushes the two-edge sum below 1.
  Imc lowered = example2();
  lowered.set_delta(1, 0, Interval::parse("[0.6,0.7]"));
  CHECK(!is_large(lowered, edges({{1, 0}, {1, 2}})));
  CHECK(is_large(lowered, edges({{1, 0}, {1, 1}, {1, 2}})));

  // Sum exactly 1 with a right-open member is not large.
  Imc open_at_one = make_imc({"a", "b", "c"}, {{"a", "b", "[0,0.5)"}, {"a", "c", "[0.5,0.5]"},
                                               {"b", "b", "[1,1]"}, {"c", "c", "[1,1]"}});
  CHECK(!is_large(open_at_one, edges({{0, 1}, {0, 2}})));

  CHECK(is_large(example1(), edges({{0, 0}, {0, 1}})));  // 2 > 1
  CHECK_THROWS_AS(is_large(m, edges({{0, 0}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("realisability asks the excluded edges to admit probability 0") {
  Imc m2 = example2();
  EdgeQuery q2(m2);
  CHECK(is_realisable(q2, 1, edges({{1, 0}, {1, 2}})));              // drops [0,0.5]
  CHECK(is_realisable(q2, 1, q2.edges_from(1)));                     // drops nothing
  CHECK(!is_realisable(q2, 1, edges({{1, 0}, {1, 1}})));             // would drop (0,0.2]

  Imc m1 = example1();
  EdgeQuery q1(m1);
  CHECK(!is_realisable(q1, 0, edges({{0, 0}})));  // would drop (0,1)
  CHECK_THROWS_AS(is_realisable(q1, 0, edges({{1, 1}})), std::invalid_argument);
}

TEST_CASE("the valid sets of the example models") {
  Imc m2 = example2();
  EdgeQuery q2(m2);
  EdgeSet b1 = edges({{1, 0}, {1, 1}, {1, 2}});
  EdgeSet b2 = edges({{1, 0}, {1, 2}});
  CHECK(is_valid(q2, 1, b1));
  CHECK(is_valid(q2, 1, b2));
  CHECK(!is_valid(q2, 1, edges({{1, 0}})));
  CHECK(!is_valid(q2, 1, EdgeSet{}));
  CHECK(enumerate_valid_sets(q2, 1) == std::vector<EdgeSet>{b1, b2});
  CHECK(enumerate_valid_sets(q2, 2) == std::vector<EdgeSet>{edges({{2, 2}})});

  Imc m1 = example1();
  EdgeQuery q1(m1);
  CHECK(enumerate_valid_sets(q1, 0) == std::vector<EdgeSet>{edges({{0, 0}, {0, 1}})});
}

TEST_CASE("the excludable-edge guard trips") {
  Imc m = make_imc({"a", "b", "c", "d"},
                   {{"a", "a", "[0,1]"}, {"a", "b", "[0,1]"}, {"a", "c", "[0,1]"},
                    {"a", "d", "[0,1]"}, {"b", "b", "[1,1]"}, {"c", "c", "[1,1]"},
                    {"d", "d", "[1,1]"}});
  EdgeQuery q(m);
  CHECK(enumerate_valid_sets(q, 0).size() == 15);  // 2^4 minus the empty set
  CHECK_THROWS_AS(enumerate_valid_sets(q, 0, 3), GuardExceeded);
}

TEST_CASE("witness assignments satisfy their constraints") {
  Imc m2 = example2();
  EdgeQuery q2(m2);
  SUBCASE("example 2, all three edges kept") {
    Assignment a = witness_assignment(q2, 1, edges({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(satisfies_model(m2, a));
    CHECK(a.support(3) == StateSet::of(3, {0, 1, 2}));
    CHECK(a.total() == Rational(1));
  }
  SUBCASE("example 2, self-loop dropped: forced to the upper endpoints") {
    Assignment a = witness_assignment(q2, 1, edges({{1, 0}, {1, 2}}));
    CHECK(satisfies_model(m2, a));
    CHECK(a.support(3) == StateSet::of(3, {0, 2}));
    // Upper endpoints sum to exactly 1 here, so the values are pinned.
    CHECK(a.probs[0].second == Rational(4, 5));
    CHECK(a.probs[1].second == Rational(1, 5));
  }
  SUBCASE("example 1: any strictly interior pair works") {
    Imc m1 = example1();
    EdgeQuery q1(m1);
    Assignment a = witness_assignment(q1, 0, edges({{0, 0}, {0, 1}}));
    CHECK(satisfies_model(m1, a));
    CHECK(a.support(2) == StateSet::of(2, {0, 1}));
    for (const auto& [t, p] : a.probs) {
      CHECK(p > Rational(0));
      CHECK(p < Rational(1));
    }
  }
  SUBCASE("invalid input is rejected") {
    CHECK_THROWS_AS(witness_assignment(q2, 1, edges({{1, 1}, {1, 2}})), std::invalid_argument);
  }
}

TEST_CASE("forced-zero edges make support exactness impossible") {
  // Lower endpoints sum to 1 and the second edge is pinned at 0: the set is
  // valid by the syntactic definition, yet only {a} can be a support.
  Imc m = make_imc({"a", "b"}, {{"a", "a", "[1,1]"}, {"a", "b", "[0,0.5]"}, {"b", "b", "[1,1]"}});
  REQUIRE(well_formed(m).ok());
  EdgeQuery q(m);
  EdgeSet both = edges({{0, 0}, {0, 1}});
  CHECK(is_valid(q, 0, both));
  CHECK_THROWS_AS(witness_assignment(q, 0, both), std::domain_error);
  Assignment a = witness_assignment(q, 0, edges({{0, 0}}));
  CHECK(a.probs == std::vector<std::pair<int, Rational>>{{0, Rational(1)}});
}

TEST_CASE("largeness is monotone and realisability anti-monotone under inclusion") {
  RandomModelSpec spec;
  spec.seed = 77;
  spec.states = 4;
  std::mt19937_64 rng(5);
  for (std::uint64_t instance = 0; instance < 50; ++instance) {
    Imc m = generate_model(spec, instance);
    EdgeQuery q(m);
    for (int s = 0; s < m.state_count(); ++s) {
      EdgeSet full = q.edges_from(s);
      if (full.empty()) continue;
      // Random nested pair b ⊆ bigger ⊆ full.
      std::vector<Edge> small_items, big_items;
      for (const Edge& e : full.items) {
        bool in_big = rng() % 2 == 0;
        bool in_small = in_big && rng() % 2 == 0;
        if (in_big) big_items.push_back(e);
        if (in_small) small_items.push_back(e);
      }
      EdgeSet small = EdgeSet::of(small_items), big = EdgeSet::of(big_items);
      if (!small.empty() && is_large(m, small)) CHECK(is_large(m, big));
      if (is_realisable(q, s, small)) CHECK(is_realisable(q, s, big));
    }
  }
}

TEST_CASE("every state of a well-formed model has a valid set, with the exact witness dichotomy") {
  RandomModelSpec spec;
  spec.seed = 2024;
  for (std::uint64_t instance = 0; instance < 120; ++instance) {
    spec.states = 1 + instance % 5;
    spec.denominator = 2 + instance % 7;
    Imc m = generate_model(spec, instance);
    EdgeQuery q(m);
    for (int s = 0; s < m.state_count(); ++s) {
      auto valid = enumerate_valid_sets(q, s);
      CHECK(!valid.empty());
      for (const EdgeSet& b : valid) {
        Rational lo_sum;
        bool zero_lo = false;
        for (const Edge& e : b.items) {
          lo_sum += m.delta(e.src, e.dst).lo();
          zero_lo |= m.delta(e.src, e.dst).lo().is_zero();
        }
        bool degenerate = lo_sum == Rational(1) && zero_lo;
        if (degenerate) {
          CHECK_THROWS_AS(witness_assignment(q, s, b), std::domain_error);
        } else {
          Assignment a = witness_assignment(q, s, b);
          CHECK(satisfies_model(m, a));
          CHECK(a.total() == Rational(1));
          StateSet expected(m.state_count());
          for (const Edge& e : b.items) expected.set(e.dst);
          CHECK(a.support(m.state_count()) == expected);
        }
      }
    }
  }
}

TEST_CASE("supports of arbitrary assignments are valid sets") {
  RandomModelSpec spec;
  spec.seed = 4096;
  for (std::uint64_t instance = 0; instance < 60; ++instance) {
    spec.states = 2 + instance % 4;
    Imc m = generate_model(spec, instance);
    EdgeQuery q(m);
    for (int s = 0; s < m.state_count(); ++s) {
      Assignment a = some_assignment(q, s);
      REQUIRE(satisfies_model(m, a));
      std::vector<Edge> support_edges;
      for (const auto& [t, p] : a.probs)
        if (p.sign() > 0) support_edges.push_back({s, t});
      CHECK(is_valid(q, s, EdgeSet::of(support_edges)));
    }
  }
}

#include <doctest.h>

#include "helpers.hpp"
#include "oimc/oracle.hpp"
#include "oimc/qual_imdp.hpp"
#include "oimc/simulate.hpp"

using namespace oimc;
using testing::example1;
using testing::example2;
using testing::ids;

TEST_CASE("decay reference values") {
  CHECK(reference_decay_probability_exact(Rational(1, 2), 1) == Rational(1, 2));
  CHECK(reference_decay_probability_exact(Rational(1, 2), 3) == Rational(43, 64));
  double limit = reference_decay_probability(Rational(1, 2), 64);
  CHECK(limit == doctest::Approx(0.711212).epsilon(1e-5));
  // Beyond 64 terms the product has converged to double precision.
  CHECK(reference_decay_probability(Rational(1, 2), 128) == doctest::Approx(limit).epsilon(1e-12));
  CHECK_THROWS_AS(reference_decay_probability_exact(Rational(1), 4), std::invalid_argument);
}

TEST_CASE("a trial starting inside the target hits immediately") {
  Imc m = example1();
  SchedulerSpec spec;
  spec.kind = SchedulerSpec::Kind::Constant;
  spec.rate = Rational(1, 2);
  spec.trials = 500;
  spec.start = 1;  // the target itself
  Estimate est = simulate_reach(m, ids(m, {"s1"}), spec);
  CHECK(est.hits == est.trials);
  CHECK(est.value == 1.0);
}

TEST_CASE("identical spec and seed give identical hit counts") {
  Imc m = example1();
  SchedulerSpec spec;
  spec.kind = SchedulerSpec::Kind::Decaying;
  spec.rate = Rational(1, 2);
  spec.trials = 5000;
  spec.horizon = 50;
  spec.seed = 1234;
  Estimate a = simulate_reach(m, ids(m, {"s1"}), spec);
  Estimate b = simulate_reach(m, ids(m, {"s1"}), spec);
  CHECK(a.hits == b.hits);
  spec.seed = 1235;
  Estimate c = simulate_reach(m, ids(m, {"s1"}), spec);
  CHECK(a.hits != c.hits);  // overwhelmingly likely for 5000 trials
}

TEST_CASE("the constant scheduler reaches the example 1 target almost surely") {
  Imc m = example1();
  SchedulerSpec spec;
  spec.kind = SchedulerSpec::Kind::Constant;
  spec.rate = Rational(1, 2);
  spec.trials = 4000;
  spec.horizon = 30;  // residual (1/2)^30
  spec.seed = 99;
  Estimate est = simulate_reach(m, ids(m, {"s1"}), spec);
  CHECK(est.value > 0.99);
}

TEST_CASE("the decaying scheduler on example 1 tracks the reference probability") {
  Imc m = example1();
  SchedulerSpec spec;
  spec.kind = SchedulerSpec::Kind::Decaying;
  spec.rate = Rational(1, 2);
  spec.trials = 20000;
  spec.horizon = 100;
  spec.seed = 2718;
  Estimate est = simulate_reach(m, ids(m, {"s1"}), spec);
  double expected = reference_decay_probability(Rational(1, 2), 64);
  CHECK(est.value == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("the decaying scheduler confines example 2 inside its end component") {
  Imc m = example2();
  SchedulerSpec spec;
  spec.kind = SchedulerSpec::Kind::Decaying;
  spec.rate = Rational(1, 2);
  spec.trials = 4000;
  spec.horizon = 100;
  spec.seed = 5;
  Estimate est = simulate_reach(m, ids(m, {"s2"}), spec);
  // Reaching s2 must be possible but not almost sure.
  CHECK(est.value > 0.0);
  CHECK(est.value < 0.9);
}

TEST_CASE("scheduler validation errors") {
  Imc m = example1();
  SchedulerSpec spec;
  spec.rate = Rational(1, 2);

  SUBCASE("rate outside (0,1)") {
    spec.rate = Rational(1);
    CHECK_THROWS_AS(simulate_reach(m, ids(m, {"s1"}), spec), std::invalid_argument);
  }
  SUBCASE("decaying requires an end component around the start") {
    // In a -> b with b the target, no target-free component contains a.
    Imc chain = testing::make_imc({"a", "b"}, {{"a", "b", "[1,1]"}, {"b", "b", "[1,1]"}});
    SchedulerSpec d;
    d.kind = SchedulerSpec::Kind::Decaying;
    d.rate = Rational(1, 2);
    CHECK_THROWS_AS(simulate_reach(chain, chain.set_of({"b"}), d), std::domain_error);
  }
  SUBCASE("an explicit confinement set must be an end component") {
    SchedulerSpec d;
    d.kind = SchedulerSpec::Kind::Decaying;
    d.rate = Rational(1, 2);
    d.confine = StateSet::all(2);  // {s0,s1} is not strongly connected here
    CHECK_THROWS_AS(simulate_reach(m, ids(m, {"s1"}), d), std::domain_error);
  }
}

TEST_CASE("exit mass is clamped when the intervals demand it") {
  // The interior edge (1/4,1] keeps at least a quarter of the mass inside and
  // its open lower endpoint needs slack, so a requested exit mass of 3/4 is
  // infeasible and must be reduced.
  Imc m = testing::make_imc({"a", "b", "t"}, {{"a", "b", "(1/4,1]"},
                                              {"a", "t", "[0,1]"},
                                              {"b", "a", "[1,1]"},
                                              {"t", "t", "[1,1]"}});
  SchedulerSpec spec;
  spec.kind = SchedulerSpec::Kind::Constant;
  spec.rate = Rational(3, 4);
  spec.trials = 2000;
  spec.horizon = 50;
  spec.seed = 12;
  Estimate est = simulate_reach(m, m.set_of({"t"}), spec);
  CHECK(est.value > 0.5);  // still exits often, at the clamped rate
}

TEST_CASE("a zero floor cannot starve an undroppable interior edge") {
  // State a pins its whole unit of mass to lower endpoints, which drives the
  // component-wide interior floor to zero; state b still has to give its
  // zero-open self-loop strictly positive probability on every step.
  Imc m = testing::make_imc({"a", "b", "t"}, {{"a", "a", "[1,1]"},
                                              {"a", "b", "[0,0.5]"},
                                              {"b", "b", "(0,1]"},
                                              {"b", "a", "[1/2,1]"},
                                              {"b", "t", "[0,0.5]"},
                                              {"t", "t", "[1,1]"}});
  REQUIRE(well_formed(m).ok());
  SchedulerSpec spec;
  spec.kind = SchedulerSpec::Kind::Decaying;
  spec.rate = Rational(1, 2);
  spec.trials = 500;
  spec.horizon = 30;
  spec.seed = 21;
  spec.start = 1;  // b
  Estimate est = simulate_reach(m, m.set_of({"t"}), spec);
  CHECK(est.trials == 500);
  CHECK(est.value < 1.0);
}

TEST_CASE("decaying runs stay interval-consistent on generated components") {
  // Exercises the step-assignment construction (floors, caps, water-fill)
  // across random models; the exact membership checks run on every cached
  // distribution.
  RandomModelSpec mspec;
  mspec.seed = 6060;
  int simulated = 0;
  for (std::uint64_t instance = 0; instance < 80 && simulated < 25; ++instance) {
    mspec.states = 3 + instance % 3;
    Imc m = generate_model(mspec, instance);
    StateSet t = generate_target(mspec, instance, m.state_count());
    IlecReport report = maximal_ilecs_avoiding(m.make_absorbing(t), t);
    if (report.ilecs.empty()) continue;
    SchedulerSpec spec;
    spec.kind = SchedulerSpec::Kind::Decaying;
    spec.rate = Rational(1, 2);
    spec.trials = 200;
    spec.horizon = 40;
    spec.seed = instance;
    spec.start = report.ilecs.front().first();
    Estimate est = simulate_reach(m, t, spec);
    CHECK(est.trials == 200);
    CHECK(est.value >= 0.0);
    CHECK(est.value <= 1.0);
    ++simulated;
  }
  CHECK(simulated >= 10);
}

TEST_CASE("explicit memoryless assignments") {
  Imc m = example1();
  Assignment a0{0, {{0, Rational(1, 2)}, {1, Rational(1, 2)}}};
  Assignment a1{1, {{1, Rational(1)}}};
  Estimate est = simulate_reach(m, ids(m, {"s1"}), {a0, a1}, 40, 3000, 7, 0);
  CHECK(est.value > 0.99);

  SUBCASE("assignments violating an interval are rejected") {
    Assignment bad{0, {{1, Rational(1)}}};  // 1 is outside (0,1)
    CHECK_THROWS_AS(simulate_reach(m, ids(m, {"s1"}), {bad, a1}, 40, 100, 7, 0),
                    std::invalid_argument);
    Assignment short_sum{0, {{0, Rational(1, 4)}, {1, Rational(1, 4)}}};
    CHECK_THROWS_AS(simulate_reach(m, ids(m, {"s1"}), {short_sum, a1}, 40, 100, 7, 0),
                    std::invalid_argument);
  }
}

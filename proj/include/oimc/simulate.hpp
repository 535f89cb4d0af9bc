#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oimc/edge_algebra.hpp"
#include "oimc/imc.hpp"

namespace oimc {

// Scheduler families for the Monte Carlo runs. Both confine the process to an
// end component and control the one-step probability mass put on the
// component's exit edges: the constant family uses a fixed mass per attempt,
// the decaying family uses base^i at the i-th attempt (clamped to what the
// intervals admit; interior zero-lower-endpoint edges are held at a fixed
// floor, the rest of the mass is water-filled).
struct SchedulerSpec {
  enum class Kind { Constant, Decaying };
  Kind kind = Kind::Constant;
  Rational rate;                        // exit mass (Constant) or base (Decaying), in (0,1)
  Rational floor_scale = Rational(1, 2);  // interior floor parameter, in (0,1)
  int horizon = 200;                    // max transitions per trial
  long trials = 100000;
  std::uint64_t seed = 0;
  int start = 0;
  // Confinement set; when absent, the maximal end component avoiding the
  // target that contains the start state. A decaying spec with no such
  // component is an error.
  std::optional<StateSet> confine;
};

struct Estimate {
  long hits = 0;
  long trials = 0;
  double value = 0.0;
  double half_width = 0.0;  // 95% normal-approximation half-width
};

Estimate simulate_reach(const Imc& m, const StateSet& target, const SchedulerSpec& spec);

// Memoryless simulation under explicit per-state assignments (one per state).
// Throws std::invalid_argument when an assignment violates its intervals.
Estimate simulate_reach(const Imc& m, const StateSet& target,
                        const std::vector<Assignment>& per_state, int horizon, long trials,
                        std::uint64_t seed, int start);

// 1 - prod_{i=1..terms} (1 - base^i), the probability that a geometrically
// decaying sequence of exit attempts ever succeeds; exact.
Rational reference_decay_probability_exact(const Rational& base, int terms);

inline double reference_decay_probability(const Rational& base, int terms) {
  return reference_decay_probability_exact(base, terms).to_double();
}

}  // namespace oimc

#pragma once

#include <cstddef>
#include <vector>

#include "oimc/edge_algebra.hpp"
#include "oimc/imc.hpp"

namespace oimc {

// Intermediate sets of the fixpoint computations. Sequences hold distinct
// sets only, so size() - 1 is the number of strictly-progressing operator
// applications; inner sequences grow, the outer sequence shrinks, and both
// progress counts are bounded by the state count.
struct FixpointTrace {
  std::vector<StateSet> xs;                      // simple fixpoint
  std::vector<StateSet> ys;                      // nested: outer sequence
  std::vector<std::vector<StateSet>> xs_rounds;  // nested: inner runs per round

  std::size_t iterations() const { return xs.empty() ? 0 : xs.size() - 1; }
  std::size_t outer_iterations() const { return ys.empty() ? 0 : ys.size() - 1; }
  std::vector<std::size_t> inner_iterations() const {
    std::vector<std::size_t> out;
    for (const auto& run : xs_rounds) out.push_back(run.empty() ? 0 : run.size() - 1);
    return out;
  }
};

struct FixpointResult {
  StateSet set;
  FixpointTrace trace;
};

// States with an assignment whose whole support lies in x: every outgoing
// edge leaving x is left-closed at 0, and the edges into x form a large set.
StateSet cpre(const EdgeQuery& q, const StateSet& x);

// States with an assignment supported inside y and touching x.
StateSet apre(const EdgeQuery& q, const StateSet& y, const StateSet& x);

// The four qualitative sets under the uncertain-Markov-chain semantics.
// Every entry point first makes the target absorbing.
StateSet aq0_umc(const Imc& m, const StateSet& target);
FixpointResult eq0_umc(const Imc& m, const StateSet& target);
FixpointResult eq1_umc(const Imc& m, const StateSet& target);
StateSet aq1_umc(const Imc& m, const StateSet& target);

struct UmcAnalysis {
  StateSet aq0, eq0, eq1, aq1;
  FixpointTrace eq0_trace, eq1_trace;
};

UmcAnalysis analyze_umc(const Imc& m, const StateSet& target);

}  // namespace oimc

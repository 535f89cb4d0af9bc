#pragma once

#include <vector>

#include "oimc/edge_algebra.hpp"
#include "oimc/imc.hpp"
#include "oimc/qual_umc.hpp"

namespace oimc {

// Outcome of the three end-component conditions for a candidate state set:
// (1) no positive-lower-endpoint edge leaves the set, (2) every member's
// upper endpoints over edges staying inside sum to at least 1, (3) the
// induced subgraph is strongly connected.
struct IlecCheck {
  bool cond1 = true;
  bool cond2 = true;
  bool cond3 = true;
  bool ok() const { return cond1 && cond2 && cond3; }
};

IlecCheck ilec_check(const EdgeQuery& q, const StateSet& candidate);  // throws on empty set

inline bool is_ilec(const EdgeQuery& q, const StateSet& candidate) {
  return ilec_check(q, candidate).ok();
}

struct IlecReport {
  std::vector<StateSet> ilecs;  // maximal, pairwise disjoint, avoid the target
  StateSet z;                   // union of the above
  int rounds = 0;               // refinement rounds that removed at least one state
};

// Maximal end components disjoint from the (absorbing) target, by SCC
// refinement: split the target-free subgraph into SCCs, drop states breaking
// condition (1) or (2) with respect to their component, re-split, repeat.
IlecReport maximal_ilecs_avoiding(const Imc& m, const StateSet& target);

// For zero-probability and exists-one questions the two semantics coincide;
// these delegate to the uncertain-Markov-chain computations.
StateSet aq0_imdp(const Imc& m, const StateSet& target);
FixpointResult eq0_imdp(const Imc& m, const StateSet& target);
FixpointResult eq1_imdp(const Imc& m, const StateSet& target);

struct Aq1ImdpResult {
  StateSet set;
  IlecReport report;
};

// Universal almost-sure reachability under the IMDP semantics: the complement
// of the states that can reach some target-free end component.
Aq1ImdpResult aq1_imdp(const Imc& m, const StateSet& target);

struct ImdpAnalysis {
  StateSet aq0, eq0, eq1, aq1;
  IlecReport ilec_report;
};

ImdpAnalysis analyze_imdp(const Imc& m, const StateSet& target);

}  // namespace oimc

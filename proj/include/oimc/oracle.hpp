#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oimc/edge_algebra.hpp"
#include "oimc/imc.hpp"

namespace oimc {

// Explicit finite MDP abstraction: one action per valid edge set of each
// state, keeping only the action's support. Exponential in the worst case;
// for differential testing of the polynomial algorithms on small instances.
struct QaMdp {
  int state_count = 0;
  std::vector<std::vector<StateSet>> actions;  // per state, support sets
};

QaMdp build_qa(const EdgeQuery& q, int l0c_guard = 20);

struct OracleSets {
  StateSet aq0, eq0, eq1, aq1;
};

// Textbook qualitative reachability on the explicit MDP (the target is
// expected to be absorbing): forall-positive via the attractor, exists-zero
// as its complement, exists-one via the nested fixpoint over explicit
// actions, forall-one by removing everything that can reach exists-zero.
OracleSets oracle_sets(const QaMdp& mdp, const StateSet& target);

// Parameters of the repaired random model generator. Generated models are
// always well formed; endpoints live on the grid k/denominator.
struct RandomModelSpec {
  int states = 4;
  double edge_density = 0.5;  // probability an ordered pair carries an edge
  int denominator = 8;
  double open_prob = 0.5;  // chance a non-forced endpoint is open
  std::uint64_t seed = 0;
};

Imc generate_model(const RandomModelSpec& spec, std::uint64_t instance);

// Non-empty target, proper subset when the model has more than one state.
StateSet generate_target(const RandomModelSpec& spec, std::uint64_t instance, int states);

// Compares the polynomial algorithms against the oracle on one instance;
// returns false and fills `detail` on any disagreement.
bool check_instance(const Imc& m, const StateSet& target, std::string* detail);

struct DifferentialMismatch {
  std::uint64_t instance = 0;
  std::string model_text;  // serialized counterexample
  std::vector<std::string> target;
  std::string detail;
};

struct DifferentialReport {
  std::uint64_t instances = 0;
  std::vector<DifferentialMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

DifferentialReport differential_run(const RandomModelSpec& spec, std::uint64_t instances);

}  // namespace oimc

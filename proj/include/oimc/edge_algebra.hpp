#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "oimc/imc.hpp"

namespace oimc {

// A set of edges, kept sorted by (src, dst). Most callers build one-source
// sets, but the representation is general.
struct EdgeSet {
  std::vector<Edge> items;  // sorted, unique

  static EdgeSet of(std::vector<Edge> edges);

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
  bool contains(const Edge& e) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

// An exact distribution over successor states of `state`, each probability
// inside the corresponding interval. Entries are sorted by target and hold
// only the positive probabilities.
struct Assignment {
  int state = -1;
  std::vector<std::pair<int, Rational>> probs;

  StateSet support(std::size_t universe) const;
  Rational total() const;
};

// True when every entry lies in its interval (strictly inside open endpoints),
// absent targets admit probability 0, and the total is exactly 1.
bool satisfies_model(const Imc& m, const Assignment& a);

// Cached per-edge interval data for one model; the query surface the fixpoint
// algorithms and the valid-set machinery share.
class EdgeQuery {
public:
  struct EdgeInfo {
    int target;
    LeftClass left;
    bool right_closed;
    Rational lo, hi;
  };

  explicit EdgeQuery(const Imc& m);

  const Imc& model() const { return *model_; }
  int state_count() const { return model_->state_count(); }
  const std::vector<EdgeInfo>& out(int s) const { return info_[s]; }

  EdgeSet edges_from(int s) const;
  EdgeSet edges_from_to(int s, const StateSet& targets) const;
  EdgeSet edges_from_to_class(StarClass star, int s, const StateSet& targets) const;

private:
  const Imc* model_;
  std::vector<std::vector<EdgeInfo>> info_;
};

// Largeness of a one-source edge set: upper endpoint sum > 1, or = 1 with
// every interval right-closed. Empty sets are not large. Throws
// std::invalid_argument when the edges do not share a source.
bool is_large(const Imc& m, const EdgeSet& b);

// Every edge of E(s) excluded from b must admit probability exactly 0, i.e.
// be left-closed with lower endpoint 0. Throws when b is not a subset of the
// outgoing edges of s.
bool is_realisable(const EdgeQuery& q, int s, const EdgeSet& b);

bool is_valid(const EdgeQuery& q, int s, const EdgeSet& b);

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All valid subsets of E(s), in deterministic order: candidates are indexed
// by ascending bitmask over the excludable ([0,.>) edges, where a set bit
// excludes that edge; mask 0 is the full edge set. Only excludable edges are
// enumerated, so the candidate count is 2^k for k the number of [0,.>) edges;
// throws GuardExceeded when k exceeds the guard.
std::vector<EdgeSet> enumerate_valid_sets(const EdgeQuery& q, int s, int l0c_guard = 20);

// Constructive direction of the valid-set characterisation: an assignment
// whose support is exactly the targets of b. Open endpoints are tightened by
// a slack computed from the interval widths and the endpoint sums, then the
// remaining mass is water-filled in target order. Throws std::domain_error
// in the one degenerate case where no such assignment exists (lower endpoint
// sum of b equal to 1 with a zero lower endpoint inside b).
Assignment witness_assignment(const EdgeQuery& q, int s, const EdgeSet& b);

// Some assignment for s over its full edge set, with no support guarantee;
// exists for every state of a well-formed model.
Assignment some_assignment(const EdgeQuery& q, int s);

}  // namespace oimc

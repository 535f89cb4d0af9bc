#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oimc/interval.hpp"
#include "oimc/state_set.hpp"

namespace oimc {

// A state pair whose interval is not the point [0,0].
struct Edge {
  int src = -1;
  int dst = -1;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Per-state evaluation of the four well-formedness conditions. The sums are
// always reported so violations carry the offending value.
struct StateConditions {
  Rational lo_sum, hi_sum;
  bool lo_sum_ok = true;     // (1a) sum of lower endpoints <= 1
  bool lo_closed_ok = true;  // (1b) sum = 1 implies every interval left-closed
  bool hi_sum_ok = true;     // (2a) sum of upper endpoints >= 1
  bool hi_closed_ok = true;  // (2b) sum = 1 implies every interval right-closed
  bool ok() const { return lo_sum_ok && lo_closed_ok && hi_sum_ok && hi_closed_ok; }
};

struct WellFormednessReport {
  std::vector<StateConditions> per_state;
  bool ok() const {
    for (const auto& c : per_state)
      if (!c.ok()) return false;
    return true;
  }
  // "state 's1' violates condition 2a (...)" for the first violation found,
  // empty when well formed.
  std::string first_violation(const std::vector<std::string>& state_ids) const;
};

// An interval Markov chain over named states. The transition function is
// total: pairs without a stored interval are the point interval [0,0]. Stored
// rows hold only the non-[0,0] entries, sorted by target index, so the edge
// set is derived rather than stored.
class Imc {
public:
  using RowEntry = std::pair<int, Interval>;
  using Row = std::vector<RowEntry>;

  explicit Imc(std::vector<std::string> state_ids);

  int state_count() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& state_ids() const { return ids_; }
  const std::string& id_of(int index) const { return ids_[index]; }
  // -1 when the id is not declared.
  int index_of(std::string_view id) const;

  // Setting [0,0] erases any stored entry.
  void set_delta(int src, int dst, const Interval& iv);
  const Interval& delta(int src, int dst) const;
  const Row& row(int src) const { return rows_[src]; }

  std::vector<Edge> edges() const;

  // Copy with every state in t made absorbing: delta(s,s) = [1,1] and all
  // other entries of the row [0,0].
  Imc make_absorbing(const StateSet& t) const;

  StateSet set_of(const std::vector<std::string>& ids) const;  // throws on unknown id

private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Row> rows_;
};

WellFormednessReport well_formed(const Imc& m);

}  // namespace oimc

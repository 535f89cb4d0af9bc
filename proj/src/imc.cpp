#include "oimc/imc.hpp"

#include <algorithm>
#include <stdexcept>

namespace oimc {

Imc::Imc(std::vector<std::string> state_ids) : ids_(std::move(state_ids)) {
  rows_.resize(ids_.size());
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
    auto [it, inserted] = index_.emplace(ids_[i], i);
    if (!inserted) throw std::invalid_argument("duplicate state id '" + ids_[i] + "'");
  }
}

int Imc::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

void Imc::set_delta(int src, int dst, const Interval& iv) {
  Row& row = rows_.at(src);
  if (dst < 0 || dst >= state_count()) throw std::out_of_range("target index out of range");
  auto it = std::lower_bound(row.begin(), row.end(), dst,
                             [](const RowEntry& e, int d) { return e.first < d; });
  if (iv.is_zero()) {
    if (it != row.end() && it->first == dst) row.erase(it);
    return;
  }
  if (it != row.end() && it->first == dst) it->second = iv;
  else row.insert(it, {dst, iv});
}

const Interval& Imc::delta(int src, int dst) const {
  const Row& row = rows_.at(src);
  auto it = std::lower_bound(row.begin(), row.end(), dst,
                             [](const RowEntry& e, int d) { return e.first < d; });
  if (it != row.end() && it->first == dst) return it->second;
  return Interval::zero();
}

std::vector<Edge> Imc::edges() const {
  std::vector<Edge> out;
  for (int s = 0; s < state_count(); ++s)
    for (const auto& [t, iv] : rows_[s]) out.push_back({s, t});
  return out;
}

Imc Imc::make_absorbing(const StateSet& t) const {
  Imc copy = *this;
  for (int s : t.indices()) {
    copy.rows_[s].clear();
    copy.rows_[s].push_back({s, Interval::one()});
  }
  return copy;
}

StateSet Imc::set_of(const std::vector<std::string>& ids) const {
  StateSet out(state_count());
  for (const auto& id : ids) {
    int i = index_of(id);
    if (i < 0) throw std::invalid_argument("unknown state id '" + id + "'");
    out.set(i);
  }
  return out;
}

WellFormednessReport well_formed(const Imc& m) {
  WellFormednessReport report;
  report.per_state.resize(m.state_count());
  const Rational one(1);
  for (int s = 0; s < m.state_count(); ++s) {
    StateConditions& c = report.per_state[s];
    bool all_left_closed = true, all_right_closed = true;
    for (const auto& [t, iv] : m.row(s)) {
      c.lo_sum += iv.lo();
      c.hi_sum += iv.hi();
      all_left_closed &= iv.left_closed();
      all_right_closed &= iv.right_closed();
    }
    // Absent pairs are [0,0]: they add nothing to the sums and are closed on
    // both sides, so only stored entries matter.
    c.lo_sum_ok = c.lo_sum <= one;
    c.lo_closed_ok = c.lo_sum != one || all_left_closed;
    c.hi_sum_ok = c.hi_sum >= one;
    c.hi_closed_ok = c.hi_sum != one || all_right_closed;
  }
  return report;
}

std::string WellFormednessReport::first_violation(
    const std::vector<std::string>& state_ids) const {
  for (std::size_t s = 0; s < per_state.size(); ++s) {
    const StateConditions& c = per_state[s];
    if (c.ok()) continue;
    std::string head = "state '" + state_ids[s] + "' violates condition ";
    if (!c.lo_sum_ok)
      return head + "1a (lower endpoint sum " + c.lo_sum.str() + " > 1)";
    if (!c.lo_closed_ok)
      return head + "1b (lower endpoint sum is 1 but an interval is left-open)";
    if (!c.hi_sum_ok)
      return head + "2a (upper endpoint sum " + c.hi_sum.str() + " < 1)";
    return head + "2b (upper endpoint sum is 1 but an interval is right-open)";
  }
  return {};
}

}  // namespace oimc

#include "oimc/edge_algebra.hpp"

#include <algorithm>
#include <cassert>

namespace oimc {

EdgeSet EdgeSet::of(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return EdgeSet{std::move(edges)};
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(items.begin(), items.end(), e);
}

StateSet Assignment::support(std::size_t universe) const {
  StateSet s(universe);
  for (const auto& [t, p] : probs)
    if (p.sign() > 0) s.set(t);
  return s;
}

Rational Assignment::total() const {
  Rational sum;
  for (const auto& [t, p] : probs) sum += p;
  return sum;
}

bool satisfies_model(const Imc& m, const Assignment& a) {
  if (a.state < 0 || a.state >= m.state_count()) return false;
  if (a.total() != Rational(1)) return false;
  StateSet listed(m.state_count());
  for (const auto& [t, p] : a.probs) {
    if (t < 0 || t >= m.state_count()) return false;
    if (!m.delta(a.state, t).contains(p)) return false;
    listed.set(t);
  }
  // Every unlisted target carries probability 0, which must be admitted.
  for (int t = 0; t < m.state_count(); ++t) {
    if (listed.test(t)) continue;
    if (!m.delta(a.state, t).contains(Rational(0))) return false;
  }
  return true;
}

EdgeQuery::EdgeQuery(const Imc& m) : model_(&m) {
  info_.resize(m.state_count());
  for (int s = 0; s < m.state_count(); ++s) {
    info_[s].reserve(m.row(s).size());
    for (const auto& [t, iv] : m.row(s)) {
      info_[s].push_back({t, classify(iv).left, iv.right_closed(), iv.lo(), iv.hi()});
    }
  }
}

EdgeSet EdgeQuery::edges_from(int s) const {
  std::vector<Edge> out;
  out.reserve(info_[s].size());
  for (const auto& e : info_[s]) out.push_back({s, e.target});
  return EdgeSet{std::move(out)};
}

EdgeSet EdgeQuery::edges_from_to(int s, const StateSet& targets) const {
  std::vector<Edge> out;
  for (const auto& e : info_[s])
    if (targets.test(e.target)) out.push_back({s, e.target});
  return EdgeSet{std::move(out)};
}

EdgeSet EdgeQuery::edges_from_to_class(StarClass star, int s, const StateSet& targets) const {
  std::vector<Edge> out;
  for (const auto& e : info_[s])
    if (targets.test(e.target) && matches(model_->delta(s, e.target), star))
      out.push_back({s, e.target});
  return EdgeSet{std::move(out)};
}

bool is_large(const Imc& m, const EdgeSet& b) {
  if (b.empty()) return false;
  int src = b.items.front().src;
  Rational hi_sum;
  bool all_right_closed = true;
  for (const Edge& e : b.items) {
    if (e.src != src) throw std::invalid_argument("largeness requires a single source state");
    const Interval& iv = m.delta(e.src, e.dst);
    hi_sum += iv.hi();
    all_right_closed &= iv.right_closed();
  }
  const Rational one(1);
  return hi_sum > one || (hi_sum == one && all_right_closed);
}

bool is_realisable(const EdgeQuery& q, int s, const EdgeSet& b) {
  for (const Edge& e : b.items)
    if (e.src != s || q.model().delta(e.src, e.dst).is_zero())
      throw std::invalid_argument("edge set is not a subset of the outgoing edges");
  for (const auto& e : q.out(s)) {
    if (b.contains({s, e.target})) continue;
    if (e.left != LeftClass::ZeroClosed) return false;
  }
  return true;
}

bool is_valid(const EdgeQuery& q, int s, const EdgeSet& b) {
  return is_large(q.model(), b) && is_realisable(q, s, b);
}

std::vector<EdgeSet> enumerate_valid_sets(const EdgeQuery& q, int s, int l0c_guard) {
  std::vector<Edge> mandatory, excludable;
  for (const auto& e : q.out(s)) {
    if (e.left == LeftClass::ZeroClosed) excludable.push_back({s, e.target});
    else mandatory.push_back({s, e.target});
  }
  int k = static_cast<int>(excludable.size());
  if (k > l0c_guard)
    throw GuardExceeded("state has " + std::to_string(k) +
                        " excludable edges, above the guard of " + std::to_string(l0c_guard));
  std::vector<EdgeSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Edge> edges = mandatory;
    for (int i = 0; i < k; ++i)
      if (!(mask & (std::uint64_t{1} << i))) edges.push_back(excludable[i]);
    EdgeSet candidate = EdgeSet::of(std::move(edges));
    if (is_large(q.model(), candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

namespace {

struct FillEntry {
  int target;
  Rational lo, hi;  // tightened bounds
};

// Fill `total` across entries in order, starting every entry at its lower
// bound. Caller guarantees sum(lo) <= total <= sum(hi).
void water_fill(std::vector<FillEntry>& entries, const Rational& total,
                std::vector<std::pair<int, Rational>>& out) {
  Rational leftover = total;
  for (const FillEntry& e : entries) leftover -= e.lo;
  assert(leftover.sign() >= 0);
  for (const FillEntry& e : entries) {
    Rational room = e.hi - e.lo;
    Rational add = min(leftover, room);
    leftover -= add;
    out.emplace_back(e.target, e.lo + add);
  }
  assert(leftover.is_zero());
}

}  // namespace

Assignment witness_assignment(const EdgeQuery& q, int s, const EdgeSet& b) {
  if (!is_valid(q, s, b))
    throw std::invalid_argument("witness requested for an invalid edge set");
  const Imc& m = q.model();
  const Rational one(1);

  struct Item {
    int target;
    Interval iv;
    bool tighten_lo, tighten_hi;
  };
  std::vector<Item> items;
  Rational lo_sum, hi_sum;
  for (const Edge& e : b.items) {
    const Interval& iv = m.delta(e.src, e.dst);
    // Support exactness needs strictly positive mass, so a zero lower
    // endpoint is tightened even when closed.
    bool tl = iv.lo_open() || iv.lo().is_zero();
    items.push_back({e.dst, iv, tl, iv.hi_open()});
    lo_sum += iv.lo();
    hi_sum += iv.hi();
  }

  Assignment result;
  result.state = s;

  if (lo_sum > one)
    throw std::domain_error("no assignment exists: lower endpoints sum above 1");
  if (lo_sum == one) {
    // The whole unit of mass is pinned to the lower endpoints.
    for (const Item& it : items) {
      if (it.iv.lo_open())
        throw std::domain_error("no assignment exists: lower endpoints sum to 1 with an open bound");
      if (it.iv.lo().is_zero())
        throw std::domain_error(
            "no support-exact assignment: lower endpoints sum to 1 and edge to '" +
            m.id_of(it.target) + "' is forced to probability 0");
      result.probs.emplace_back(it.target, it.iv.lo());
    }
    return result;
  }

  const auto k = Rational(static_cast<long>(items.size()));
  Rational eps;
  bool have_eps = false;
  auto consider = [&](const Rational& candidate) {
    if (!have_eps || candidate < eps) eps = candidate;
    have_eps = true;
  };
  for (const Item& it : items)
    if (it.tighten_lo || it.tighten_hi) consider(it.iv.width() / Rational(2));
  if (have_eps) {
    consider((one - lo_sum) / (Rational(2) * k));
    if (hi_sum > one) consider((hi_sum - one) / (Rational(2) * k));
  }

  std::vector<FillEntry> entries;
  for (const Item& it : items) {
    Rational lo = it.iv.lo(), hi = it.iv.hi();
    if (it.tighten_lo) lo += eps;
    if (it.tighten_hi) hi -= eps;
    entries.push_back({it.target, std::move(lo), std::move(hi)});
  }
  water_fill(entries, one, result.probs);
  assert(satisfies_model(m, result));
  return result;
}

Assignment some_assignment(const EdgeQuery& q, int s) {
  const Imc& m = q.model();
  const Rational one(1);
  const auto& row = q.out(s);
  if (row.empty()) throw std::domain_error("state has no outgoing edges");

  Rational lo_sum, hi_sum;
  bool any_lo_open = false;
  for (const auto& e : row) {
    lo_sum += e.lo;
    hi_sum += e.hi;
    any_lo_open |= m.delta(s, e.target).lo_open();
  }
  if (lo_sum > one || (lo_sum == one && any_lo_open))
    throw std::domain_error("state admits no assignment (lower endpoints)");

  Assignment result;
  result.state = s;
  if (lo_sum == one) {
    for (const auto& e : row)
      if (e.lo.sign() > 0) result.probs.emplace_back(e.target, e.lo);
    return result;
  }

  const auto k = Rational(static_cast<long>(row.size()));
  Rational eps;
  bool have_eps = false;
  auto consider = [&](const Rational& candidate) {
    if (!have_eps || candidate < eps) eps = candidate;
    have_eps = true;
  };
  for (const auto& e : row) {
    const Interval& iv = m.delta(s, e.target);
    if (iv.lo_open() || iv.hi_open()) consider(iv.width() / Rational(2));
  }
  if (have_eps) {
    consider((one - lo_sum) / (Rational(2) * k));
    if (hi_sum > one) consider((hi_sum - one) / (Rational(2) * k));
  }

  std::vector<FillEntry> entries;
  Rational max_total;
  for (const auto& e : row) {
    const Interval& iv = m.delta(s, e.target);
    Rational lo = iv.lo(), hi = iv.hi();
    if (iv.lo_open()) lo += eps;
    if (iv.hi_open()) hi -= eps;
    max_total += hi;
    entries.push_back({e.target, std::move(lo), std::move(hi)});
  }
  if (max_total < one)
    throw std::domain_error("state admits no assignment (upper endpoints)");

  std::vector<std::pair<int, Rational>> filled;
  water_fill(entries, one, filled);
  for (auto& [t, p] : filled)
    if (p.sign() > 0) result.probs.emplace_back(t, std::move(p));
  assert(satisfies_model(m, result));
  return result;
}

}  // namespace oimc

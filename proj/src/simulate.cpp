#include "oimc/simulate.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "oimc/qual_imdp.hpp"

namespace oimc {

namespace {

const Rational kOne(1);

struct Cdf {
  std::vector<double> cumulative;
  std::vector<int> targets;

  static Cdf from(const Assignment& a) {
    Cdf c;
    double acc = 0.0;
    for (const auto& [t, p] : a.probs) {
      acc += p.to_double();
      c.cumulative.push_back(acc);
      c.targets.push_back(t);
    }
    return c;
  }

  int sample(double u) const {
    for (std::size_t i = 0; i + 1 < cumulative.size(); ++i)
      if (u < cumulative[i]) return targets[i];
    return targets.back();
  }
};

// Per-state data for the confinement construction.
struct ConfinedState {
  std::vector<int> exit_targets;           // outside the component (lower endpoints are 0)
  std::vector<int> floor_targets;          // inside, lower endpoint 0
  std::vector<std::pair<int, Interval>> interior;  // all inside edges
  Rational interior_lo_sum;
  Rational interior_hi_sum;
  Rational cap;       // admissible exit mass bound
  bool cap_strict = false;  // mass equal to cap needs slack that does not exist
  bool exits_lo_open = false;
};

// Exact assignment putting `mass` on the exit edges (split evenly), the floor
// on interior zero-lower-endpoint edges, and water-filling the rest.
Assignment confined_assignment(const Imc& m, int s, const ConfinedState& cs,
                               const Rational& floor_total, Rational mass) {
  if (mass > cs.cap) mass = cs.cap;
  if (mass == cs.cap && cs.cap_strict) mass /= Rational(2);
  if (mass.is_zero() && cs.exits_lo_open)
    throw std::domain_error("state '" + m.id_of(s) + "' cannot drop its exit edges");

  Assignment out;
  out.state = s;
  if (!mass.is_zero() && !cs.exit_targets.empty()) {
    Rational share = mass / Rational(static_cast<long>(cs.exit_targets.size()));
    for (int t : cs.exit_targets) out.probs.emplace_back(t, share);
  } else {
    mass = Rational(0);
  }

  // Interior bounds: floors on zero-lower-endpoint edges, interval lower
  // bounds elsewhere; tighten open endpoints when there is slack to spend.
  Rational floor_share;
  if (!cs.floor_targets.empty() && floor_total.sign() > 0)
    floor_share = floor_total / Rational(static_cast<long>(cs.floor_targets.size()));

  struct Bound {
    int target;
    Rational lo, hi;
    bool lo_needs_slack, hi_open;
  };
  std::vector<Bound> bounds;
  Rational min_sum;
  for (const auto& [t, iv] : cs.interior) {
    Rational lo = iv.lo();
    // Open lower endpoints need slack unless the floor already lifts them.
    bool needs = iv.lo_open() && (iv.lo().sign() > 0 || floor_share.is_zero());
    if (iv.lo().is_zero() && !floor_share.is_zero()) lo = floor_share;
    bounds.push_back({t, lo, iv.hi(), needs, iv.hi_open()});
    min_sum += bounds.back().lo;
  }

  Rational budget = kOne - mass;
  assert(budget >= min_sum);
  if (budget > min_sum) {
    Rational eps;
    bool have = false;
    auto consider = [&](const Rational& c) {
      if (!have || c < eps) eps = c;
      have = true;
    };
    for (const Bound& b : bounds)
      if (b.lo_needs_slack || b.hi_open) consider((b.hi - b.lo) / Rational(2));
    if (have) {
      const auto k = Rational(static_cast<long>(bounds.size()));
      consider((budget - min_sum) / (Rational(2) * k));
      if (cs.interior_hi_sum > budget)
        consider((cs.interior_hi_sum - budget) / (Rational(2) * k));
      for (Bound& b : bounds) {
        if (b.lo_needs_slack) b.lo += eps;
        if (b.hi_open) b.hi -= eps;
      }
    }
  }

  Rational leftover = budget;
  for (const Bound& b : bounds) leftover -= b.lo;
  for (const Bound& b : bounds) {
    Rational add = min(leftover, b.hi - b.lo);
    leftover -= add;
    Rational v = b.lo + add;
    if (v.sign() > 0) out.probs.emplace_back(b.target, std::move(v));
  }
  assert(leftover.is_zero());
  std::sort(out.probs.begin(), out.probs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  assert(satisfies_model(m, out));
  return out;
}

Estimate run_trials(const StateSet& target, int horizon, long trials, std::uint64_t seed,
                    int start, const std::function<const Cdf&(int state, int attempt)>& choose) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Estimate est;
  est.trials = trials;
  for (long trial = 0; trial < trials; ++trial) {
    int state = start;
    bool hit = target.test(state);
    for (int step = 1; !hit && step <= horizon; ++step) {
      state = choose(state, step).sample(unit(rng));
      hit = target.test(state);
    }
    est.hits += hit;
  }
  est.value = trials == 0 ? 0.0 : static_cast<double>(est.hits) / static_cast<double>(trials);
  est.half_width =
      trials == 0 ? 0.0 : 1.96 * std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(trials));
  return est;
}

}  // namespace

Estimate simulate_reach(const Imc& m, const StateSet& target, const SchedulerSpec& spec) {
  if (spec.rate <= Rational(0) || spec.rate >= kOne)
    throw std::invalid_argument("scheduler rate must lie strictly inside (0,1)");
  if (spec.floor_scale <= Rational(0) || spec.floor_scale >= kOne)
    throw std::invalid_argument("floor scale must lie strictly inside (0,1)");
  if (spec.start < 0 || spec.start >= m.state_count())
    throw std::invalid_argument("start state out of range");

  Imc abs = m.make_absorbing(target);
  EdgeQuery q(abs);

  StateSet confine(m.state_count());
  if (spec.confine) {
    confine = *spec.confine;
    if (!confine.empty() && !is_ilec(q, confine))
      throw std::domain_error("confinement set is not an end component");
  } else {
    for (const StateSet& c : maximal_ilecs_avoiding(abs, target).ilecs)
      if (c.test(spec.start)) {
        confine = c;
        break;
      }
  }
  if (spec.kind == SchedulerSpec::Kind::Decaying && confine.empty())
    throw std::domain_error("decaying scheduler requires an end component around the start state");

  // Interior floor: scaled minimum over the component of what its
  // zero-lower-endpoint inside edges can always absorb.
  std::unordered_map<int, ConfinedState> confined;
  Rational floor_total;
  bool have_floor = false;
  for (int s : confine.indices()) {
    ConfinedState cs;
    Rational min_floor_hi;
    bool floor_hi_set = false;
    for (const auto& [t, iv] : abs.row(s)) {
      if (!confine.test(t)) {
        cs.exit_targets.push_back(t);
        cs.exits_lo_open |= iv.lo_open();
        continue;
      }
      cs.interior.emplace_back(t, iv);
      cs.interior_lo_sum += iv.lo();
      cs.interior_hi_sum += iv.hi();
      if (iv.lo().is_zero()) {
        cs.floor_targets.push_back(t);
        if (!floor_hi_set || iv.hi() < min_floor_hi) min_floor_hi = iv.hi();
        floor_hi_set = true;
      }
    }
    if (floor_hi_set) {
      Rational local = min(min_floor_hi, kOne - cs.interior_lo_sum);
      if (!have_floor || local < floor_total) floor_total = local;
      have_floor = true;
    }
    confined.emplace(s, std::move(cs));
  }
  floor_total = have_floor ? spec.floor_scale * floor_total : Rational(0);

  for (auto& [s, cs] : confined) {
    Rational reserve = cs.floor_targets.empty() ? Rational(0) : floor_total;
    cs.cap = kOne - cs.interior_lo_sum - reserve;
    bool lo_strict = false;
    for (const auto& [t, iv] : cs.interior) {
      if (iv.lo_open() && iv.lo().sign() > 0) lo_strict = true;
      if (iv.lo().is_zero() && iv.lo_open() && reserve.is_zero()) lo_strict = true;
    }
    cs.cap_strict = lo_strict;
    if (!cs.exit_targets.empty()) {
      Rational min_hi;
      bool hi_open_at_min = false, set = false;
      for (int t : cs.exit_targets) {
        const Interval& iv = abs.delta(s, t);
        if (!set || iv.hi() < min_hi) {
          min_hi = iv.hi();
          hi_open_at_min = iv.hi_open();
          set = true;
        } else if (iv.hi() == min_hi) {
          hi_open_at_min |= iv.hi_open();
        }
      }
      Rational exit_cap = min_hi * Rational(static_cast<long>(cs.exit_targets.size()));
      if (exit_cap < cs.cap || (exit_cap == cs.cap && hi_open_at_min)) {
        cs.cap = exit_cap;
        cs.cap_strict = hi_open_at_min;
      }
    } else {
      cs.cap = Rational(0);
      cs.cap_strict = false;
    }
  }

  // Assignment caches: confined states vary by attempt under the decaying
  // family; everything else is attempt-independent.
  std::unordered_map<int, Cdf> stationary;
  std::unordered_map<std::int64_t, Cdf> per_attempt;
  auto stationary_for = [&](int s) -> const Cdf& {
    auto it = stationary.find(s);
    if (it == stationary.end()) {
      Assignment a;
      if (confine.test(s)) {
        const ConfinedState& cs = confined.at(s);
        a = confined_assignment(abs, s, cs, floor_total, spec.rate);
      } else {
        a = some_assignment(q, s);
      }
      it = stationary.emplace(s, Cdf::from(a)).first;
    }
    return it->second;
  };
  auto choose = [&](int s, int attempt) -> const Cdf& {
    if (spec.kind == SchedulerSpec::Kind::Constant || !confine.test(s)) return stationary_for(s);
    std::int64_t key = static_cast<std::int64_t>(s) * (spec.horizon + 1) + attempt;
    auto it = per_attempt.find(key);
    if (it == per_attempt.end()) {
      const ConfinedState& cs = confined.at(s);
      Assignment a = confined_assignment(abs, s, cs, floor_total,
                                         pow(spec.rate, static_cast<unsigned long>(attempt)));
      it = per_attempt.emplace(key, Cdf::from(a)).first;
    }
    return it->second;
  };

  return run_trials(target, spec.horizon, spec.trials, spec.seed, spec.start, choose);
}

Estimate simulate_reach(const Imc& m, const StateSet& target,
                        const std::vector<Assignment>& per_state, int horizon, long trials,
                        std::uint64_t seed, int start) {
  if (static_cast<int>(per_state.size()) != m.state_count())
    throw std::invalid_argument("expected one assignment per state");
  std::vector<Cdf> cdfs;
  for (int s = 0; s < m.state_count(); ++s) {
    if (per_state[s].state != s || !satisfies_model(m, per_state[s]))
      throw std::invalid_argument("assignment for state '" + m.id_of(s) +
                                  "' violates its intervals");
    cdfs.push_back(Cdf::from(per_state[s]));
  }
  // Trials stop on the first target hit; target rows are never sampled.
  auto choose = [&](int s, int) -> const Cdf& { return cdfs[s]; };
  return run_trials(target, horizon, trials, seed, start, choose);
}

Rational reference_decay_probability_exact(const Rational& base, int terms) {
  if (base <= Rational(0) || base >= kOne)
    throw std::invalid_argument("decay base must lie strictly inside (0,1)");
  Rational product(1);
  for (int i = 1; i <= terms; ++i) product *= kOne - pow(base, static_cast<unsigned long>(i));
  return kOne - product;
}

}  // namespace oimc

#include "oimc/oracle.hpp"

#include <random>

#include "oimc/model_text.hpp"
#include "oimc/qual_imdp.hpp"
#include "oimc/qual_umc.hpp"

namespace oimc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t instance, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(instance + 1) ^ (stream << 32)));
}

}  // namespace

QaMdp build_qa(const EdgeQuery& q, int l0c_guard) {
  QaMdp mdp;
  mdp.state_count = q.state_count();
  mdp.actions.resize(mdp.state_count);
  for (int s = 0; s < mdp.state_count; ++s) {
    for (const EdgeSet& b : enumerate_valid_sets(q, s, l0c_guard)) {
      StateSet support(mdp.state_count);
      for (const Edge& e : b.items) support.set(e.dst);
      mdp.actions[s].push_back(std::move(support));
    }
  }
  return mdp;
}

namespace {

// Any-action one-step graph reachability into `target`, by saturation.
StateSet mdp_can_reach(const QaMdp& mdp, const StateSet& target) {
  StateSet reach = target;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < mdp.state_count; ++s) {
      if (reach.test(s)) continue;
      for (const StateSet& a : mdp.actions[s]) {
        if (a.intersects(reach)) {
          reach.set(s);
          changed = true;
          break;
        }
      }
    }
  }
  return reach;
}

// States where every action moves into the current set with positive
// probability; the attractor of `target` under universal choice.
StateSet mdp_forall_positive(const QaMdp& mdp, const StateSet& target) {
  StateSet x = target;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < mdp.state_count; ++s) {
      if (x.test(s) || mdp.actions[s].empty()) continue;
      bool all_touch = true;
      for (const StateSet& a : mdp.actions[s])
        if (!a.intersects(x)) {
          all_touch = false;
          break;
        }
      if (all_touch) {
        x.set(s);
        changed = true;
      }
    }
  }
  return x;
}

StateSet mdp_exists_one(const QaMdp& mdp, const StateSet& target) {
  StateSet y = StateSet::all(mdp.state_count);
  for (;;) {
    StateSet x = target;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < mdp.state_count; ++s) {
        if (x.test(s)) continue;
        for (const StateSet& a : mdp.actions[s]) {
          if (a.is_subset_of(y) && a.intersects(x)) {
            x.set(s);
            changed = true;
            break;
          }
        }
      }
    }
    if (x == y) return y;
    y = std::move(x);
  }
}

}  // namespace

OracleSets oracle_sets(const QaMdp& mdp, const StateSet& target) {
  OracleSets out;
  out.aq0 = mdp_can_reach(mdp, target).complemented();
  out.eq0 = mdp_forall_positive(mdp, target).complemented();
  out.eq1 = mdp_exists_one(mdp, target);
  out.aq1 = mdp_can_reach(mdp, out.eq0).complemented();
  return out;
}

Imc generate_model(const RandomModelSpec& spec, std::uint64_t instance) {
  std::mt19937_64 rng = instance_rng(spec.seed, instance, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = spec.states;
  const int d = spec.denominator;
  const Rational one(1);

  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("s" + std::to_string(i));
  Imc m(std::move(ids));

  for (int s = 0; s < n; ++s) {
    struct Draft {
      int target;
      int lo, hi;  // grid numerators
      bool lo_open, hi_open;
    };
    std::vector<Draft> row;
    for (int t = 0; t < n; ++t) {
      if (unit(rng) >= spec.edge_density) continue;
      // Zero lower endpoints are the interesting regime (droppable or
      // undroppable edges), so they get extra weight.
      int lo = rng() % 3 == 0 ? 0 : static_cast<int>(rng() % (d + 1));
      int hi = lo + static_cast<int>(rng() % (d - lo + 1));
      if (hi == 0) hi = 1 + static_cast<int>(rng() % d);
      if (hi < lo) hi = lo;
      bool lo_open = lo != hi && unit(rng) < spec.open_prob;
      bool hi_open = lo != hi && unit(rng) < spec.open_prob;
      row.push_back({t, lo, hi, lo_open, hi_open});
    }
    if (row.empty()) {
      int t = static_cast<int>(rng() % n);
      row.push_back({t, d, d, false, false});  // [1,1]
    }

    auto lo_total = [&] {
      long sum = 0;
      for (const Draft& e : row) sum += e.lo;
      return sum;
    };
    auto hi_total = [&] {
      long sum = 0;
      for (const Draft& e : row) sum += e.hi;
      return sum;
    };

    // Repair toward well-formedness on the grid: shrink lower endpoints while
    // their sum exceeds 1, widen the largest upper endpoint to a closed 1
    // while the upper sum falls short, and close the flags that the
    // sum-equals-1 conditions force.
    while (lo_total() > d) {
      auto it = std::max_element(row.begin(), row.end(),
                                 [](const Draft& a, const Draft& b) { return a.lo < b.lo; });
      // Shrinking by exactly the excess lands on the sum-equals-1 boundary;
      // sometimes overshoot by one grid step to keep sub-boundary rows (and
      // their open zero endpoints) in the mix.
      long shrink = lo_total() - d + static_cast<long>(rng() % 2);
      it->lo -= static_cast<int>(std::min<long>(shrink, it->lo));
      if (it->lo == 0) it->lo_open = unit(rng) < spec.open_prob;
    }
    if (lo_total() == d)
      for (Draft& e : row) e.lo_open = false;
    if (hi_total() < d) {
      auto it = std::max_element(row.begin(), row.end(),
                                 [](const Draft& a, const Draft& b) { return a.hi < b.hi; });
      it->hi = d;
      it->hi_open = false;
    }
    if (hi_total() == d)
      for (Draft& e : row) e.hi_open = false;

    for (Draft& e : row) {
      if (e.lo == e.hi) e.lo_open = e.hi_open = false;
      if (e.lo == 0 && e.hi == 0) continue;  // degenerated to a non-edge
      m.set_delta(s, e.target,
                  Interval(Rational(e.lo, d), Rational(e.hi, d), e.lo_open, e.hi_open));
    }
    // A row can lose all edges only if every draft degenerated; restore one.
    if (m.row(s).empty()) m.set_delta(s, static_cast<int>(rng() % n), Interval::one());
  }

  return m;
}

StateSet generate_target(const RandomModelSpec& spec, std::uint64_t instance, int states) {
  std::mt19937_64 rng = instance_rng(spec.seed, instance, 2);
  StateSet t(states);
  if (states == 1) {
    t.set(0);
    return t;
  }
  int size = 1 + static_cast<int>(rng() % (states - 1));
  while (static_cast<int>(t.count()) < size) t.set(static_cast<int>(rng() % states));
  return t;
}

bool check_instance(const Imc& m, const StateSet& target, std::string* detail) {
  Imc abs = m.make_absorbing(target);
  EdgeQuery q(abs);
  QaMdp mdp = build_qa(q);
  OracleSets expected = oracle_sets(mdp, target);

  UmcAnalysis got = analyze_umc(abs, target);
  ImdpAnalysis imdp = analyze_imdp(abs, target);

  auto mismatch = [&](const char* name, const StateSet& want, const StateSet& have) {
    if (want == have) return false;
    if (detail) {
      *detail = std::string(name) + ": oracle ";
      for (int i : want.indices()) *detail += m.id_of(i) + " ";
      *detail += "/ algorithm ";
      for (int i : have.indices()) *detail += m.id_of(i) + " ";
    }
    return true;
  };

  if (mismatch("AQ0", expected.aq0, got.aq0)) return false;
  if (mismatch("EQ0", expected.eq0, got.eq0)) return false;
  if (mismatch("EQ1", expected.eq1, got.eq1)) return false;
  if (mismatch("AQ1(UMC)", expected.aq1, got.aq1)) return false;
  // The coincidences proved through the shared abstraction: the IMDP sets for
  // zero-probability and exists-one questions must equal the oracle's.
  if (mismatch("AQ0(IMDP)", expected.aq0, imdp.aq0)) return false;
  if (mismatch("EQ0(IMDP)", expected.eq0, imdp.eq0)) return false;
  if (mismatch("EQ1(IMDP)", expected.eq1, imdp.eq1)) return false;
  return true;
}

DifferentialReport differential_run(const RandomModelSpec& spec, std::uint64_t instances) {
  DifferentialReport report;
  report.instances = instances;
  for (std::uint64_t i = 0; i < instances; ++i) {
    Imc m = generate_model(spec, i);
    StateSet target = generate_target(spec, i, m.state_count());
    std::string detail;
    if (!check_instance(m, target, &detail)) {
      DifferentialMismatch mm;
      mm.instance = i;
      std::vector<std::string> target_ids;
      for (int t : target.indices()) target_ids.push_back(m.id_of(t));
      mm.model_text = emit_model(document_from_model(m, {{"target", target_ids}}));
      mm.target = std::move(target_ids);
      mm.detail = std::move(detail);
      report.mismatches.push_back(std::move(mm));
    }
  }
  return report;
}

}  // namespace oimc

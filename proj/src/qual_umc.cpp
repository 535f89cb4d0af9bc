#include "oimc/qual_umc.hpp"

#include "oimc/graph.hpp"

namespace oimc {

namespace {

const Rational kOne(1);

// Largeness of the outgoing edges of s restricted to `targets`.
bool restricted_large(const EdgeQuery& q, int s, const StateSet& targets) {
  Rational hi_sum;
  bool all_right_closed = true, any = false;
  for (const auto& e : q.out(s)) {
    if (!targets.test(e.target)) continue;
    any = true;
    hi_sum += e.hi;
    all_right_closed &= e.right_closed;
  }
  return any && (hi_sum > kOne || (hi_sum == kOne && all_right_closed));
}

// Every outgoing edge of s whose target is outside `inside` is left-closed
// at 0, i.e. can be assigned probability exactly 0.
bool excluded_edges_droppable(const EdgeQuery& q, int s, const StateSet& inside) {
  for (const auto& e : q.out(s))
    if (!inside.test(e.target) && e.left != LeftClass::ZeroClosed) return false;
  return true;
}

}  // namespace

StateSet cpre(const EdgeQuery& q, const StateSet& x) {
  StateSet result(q.state_count());
  for (int s = 0; s < q.state_count(); ++s)
    if (excluded_edges_droppable(q, s, x) && restricted_large(q, s, x)) result.set(s);
  return result;
}

StateSet apre(const EdgeQuery& q, const StateSet& y, const StateSet& x) {
  StateSet result(q.state_count());
  for (int s = 0; s < q.state_count(); ++s) {
    bool touches_x = false;
    for (const auto& e : q.out(s)) {
      if (x.test(e.target) && y.test(e.target)) {
        touches_x = true;
        break;
      }
    }
    if (touches_x && excluded_edges_droppable(q, s, y) && restricted_large(q, s, y))
      result.set(s);
  }
  return result;
}

StateSet aq0_umc(const Imc& m, const StateSet& target) {
  Imc abs = m.make_absorbing(target);
  return can_reach(Digraph(abs), target).complemented();
}

FixpointResult eq0_umc(const Imc& m, const StateSet& target) {
  Imc abs = m.make_absorbing(target);
  EdgeQuery q(abs);
  FixpointResult r;
  StateSet x = target;
  r.trace.xs.push_back(x);
  for (;;) {
    StateSet next = x | cpre(q, x.complemented()).complemented();
    if (next == x) break;
    x = std::move(next);
    r.trace.xs.push_back(x);
  }
  r.set = x.complemented();
  return r;
}

FixpointResult eq1_umc(const Imc& m, const StateSet& target) {
  Imc abs = m.make_absorbing(target);
  EdgeQuery q(abs);
  const int n = q.state_count();
  FixpointResult r;
  StateSet y = StateSet::all(n);
  r.trace.ys.push_back(y);
  for (;;) {
    // The two y-dependent conditions are fixed for the whole inner run.
    std::vector<bool> eligible(n);
    for (int s = 0; s < n; ++s)
      eligible[s] = excluded_edges_droppable(q, s, y) && restricted_large(q, s, y);

    StateSet x = target;
    std::vector<StateSet> run{x};
    for (;;) {
      StateSet next = x;
      for (int s = 0; s < n; ++s) {
        if (next.test(s) || !eligible[s]) continue;
        for (const auto& e : q.out(s)) {
          if (x.test(e.target) && y.test(e.target)) {
            next.set(s);
            break;
          }
        }
      }
      if (next == x) break;
      x = std::move(next);
      run.push_back(x);
    }
    r.trace.xs_rounds.push_back(std::move(run));
    if (x == y) break;
    y = std::move(x);
    r.trace.ys.push_back(y);
  }
  r.set = y;
  return r;
}

StateSet aq1_umc(const Imc& m, const StateSet& target) {
  Imc abs = m.make_absorbing(target);
  StateSet eq0 = eq0_umc(abs, target).set;
  return can_reach(Digraph(abs), eq0).complemented();
}

UmcAnalysis analyze_umc(const Imc& m, const StateSet& target) {
  Imc abs = m.make_absorbing(target);
  UmcAnalysis out;
  Digraph g(abs);
  out.aq0 = can_reach(g, target).complemented();
  FixpointResult eq0 = eq0_umc(abs, target);
  out.eq0 = eq0.set;
  out.eq0_trace = std::move(eq0.trace);
  FixpointResult eq1 = eq1_umc(abs, target);
  out.eq1 = eq1.set;
  out.eq1_trace = std::move(eq1.trace);
  out.aq1 = can_reach(g, out.eq0).complemented();
  return out;
}

}  // namespace oimc

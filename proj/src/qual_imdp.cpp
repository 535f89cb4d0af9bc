#include "oimc/qual_imdp.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "oimc/graph.hpp"

namespace oimc {

namespace {

const Rational kOne(1);

// Condition (1) for s with respect to component c: no edge with positive
// lower endpoint leads outside c.
bool no_positive_exit(const EdgeQuery& q, int s, const StateSet& c) {
  for (const auto& e : q.out(s))
    if (!c.test(e.target) && e.left == LeftClass::Positive) return false;
  return true;
}

// Condition (2): the upper endpoints of the edges staying inside c reach 1.
bool inside_mass_suffices(const EdgeQuery& q, int s, const StateSet& c) {
  Rational hi_sum;
  for (const auto& e : q.out(s))
    if (c.test(e.target)) hi_sum += e.hi;
  return hi_sum >= kOne;
}

}  // namespace

IlecCheck ilec_check(const EdgeQuery& q, const StateSet& candidate) {
  if (candidate.empty()) throw std::invalid_argument("end-component check on an empty set");
  IlecCheck check;
  for (int s : candidate.indices()) {
    check.cond1 &= no_positive_exit(q, s, candidate);
    check.cond2 &= inside_mass_suffices(q, s, candidate);
  }
  Digraph g(q.model());
  auto components = sccs(g, candidate);
  check.cond3 = components.size() == 1 && components.front() == candidate;
  return check;
}

IlecReport maximal_ilecs_avoiding(const Imc& m, const StateSet& target) {
  Imc abs = m.make_absorbing(target);
  EdgeQuery q(abs);
  Digraph g(abs);

  std::deque<StateSet> worklist;
  for (auto& comp : sccs(g, target.complemented())) worklist.push_back(std::move(comp));

  IlecReport report;
  report.z = StateSet(m.state_count());
  while (!worklist.empty()) {
    StateSet comp = std::move(worklist.front());
    worklist.pop_front();
    StateSet survivors(m.state_count());
    for (int s : comp.indices())
      if (no_positive_exit(q, s, comp) && inside_mass_suffices(q, s, comp)) survivors.set(s);
    if (survivors == comp) {
      report.ilecs.push_back(std::move(comp));
      continue;
    }
    ++report.rounds;
    if (!survivors.empty())
      for (auto& sub : sccs(g, survivors)) worklist.push_back(std::move(sub));
  }

  std::sort(report.ilecs.begin(), report.ilecs.end(),
            [](const StateSet& a, const StateSet& b) { return a.first() < b.first(); });
  for (const auto& c : report.ilecs) report.z |= c;
  return report;
}

StateSet aq0_imdp(const Imc& m, const StateSet& target) { return aq0_umc(m, target); }
FixpointResult eq0_imdp(const Imc& m, const StateSet& target) { return eq0_umc(m, target); }
FixpointResult eq1_imdp(const Imc& m, const StateSet& target) { return eq1_umc(m, target); }

Aq1ImdpResult aq1_imdp(const Imc& m, const StateSet& target) {
  Imc abs = m.make_absorbing(target);
  Aq1ImdpResult out;
  out.report = maximal_ilecs_avoiding(abs, target);
  out.set = can_reach(Digraph(abs), out.report.z).complemented();
  return out;
}

ImdpAnalysis analyze_imdp(const Imc& m, const StateSet& target) {
  ImdpAnalysis out;
  out.aq0 = aq0_imdp(m, target);
  out.eq0 = eq0_imdp(m, target).set;
  out.eq1 = eq1_imdp(m, target).set;
  Aq1ImdpResult aq1 = aq1_imdp(m, target);
  out.aq1 = std::move(aq1.set);
  out.ilec_report = std::move(aq1.report);
  return out;
}

}  // namespace oimc

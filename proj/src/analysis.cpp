#include "oimc/analysis.hpp"

#include <algorithm>

#include <json.hpp>

namespace oimc {

namespace {

nlohmann::json sorted_ids(const std::vector<std::string>& ids, const StateSet& set) {
  std::vector<std::string> names;
  for (int i : set.indices()) names.push_back(ids[i]);
  std::sort(names.begin(), names.end());
  return nlohmann::json(names);
}

}  // namespace

AnalysisReport analyze(const Imc& m, const StateSet& target) {
  WellFormednessReport wf = well_formed(m);
  if (!wf.ok()) throw ModelError("model is not well formed: " + wf.first_violation(m.state_ids()));
  AnalysisReport report;
  report.state_ids = m.state_ids();
  Imc abs = m.make_absorbing(target);
  report.umc = analyze_umc(abs, target);
  report.imdp = analyze_imdp(abs, target);
  return report;
}

std::string emit_report(const AnalysisReport& report) {
  nlohmann::json j;
  const auto& ids = report.state_ids;

  nlohmann::json umc;
  umc["AQ0"] = sorted_ids(ids, report.umc.aq0);
  umc["EQ0"] = sorted_ids(ids, report.umc.eq0);
  umc["EQ1"] = sorted_ids(ids, report.umc.eq1);
  umc["AQ1"] = sorted_ids(ids, report.umc.aq1);

  nlohmann::json imdp;
  imdp["AQ0"] = sorted_ids(ids, report.imdp.aq0);
  imdp["EQ0"] = sorted_ids(ids, report.imdp.eq0);
  imdp["EQ1"] = sorted_ids(ids, report.imdp.eq1);
  imdp["AQ1"] = sorted_ids(ids, report.imdp.aq1);

  j["semantics"] = {{"umc", umc}, {"imdp", imdp}};

  nlohmann::json ilecs = nlohmann::json::array();
  for (const auto& c : report.imdp.ilec_report.ilecs) ilecs.push_back(sorted_ids(ids, c));
  j["ilecs"] = ilecs;

  nlohmann::json iterations;
  iterations["eq0"] = report.umc.eq0_trace.iterations();
  iterations["eq1_outer"] = report.umc.eq1_trace.outer_iterations();
  iterations["eq1_inner"] = report.umc.eq1_trace.inner_iterations();
  iterations["ilec_rounds"] = report.imdp.ilec_report.rounds;
  j["iterations"] = iterations;

  return j.dump(2) + "\n";
}

}  // namespace oimc

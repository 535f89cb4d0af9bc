#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oimc/imc.hpp"
#include "oimc/qual_imdp.hpp"
#include "oimc/qual_umc.hpp"

namespace oimc {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The eight qualitative sets (four per semantics) plus diagnostics.
struct AnalysisReport {
  std::vector<std::string> state_ids;
  UmcAnalysis umc;
  ImdpAnalysis imdp;
};

// Full analysis under both semantics. Throws ModelError when the model is not
// well formed.
AnalysisReport analyze(const Imc& m, const StateSet& target);

// JSON text with sorted keys: {"ilecs": [...], "iterations": {...},
// "semantics": {"imdp": {"AQ0": [...], ...}, "umc": {...}}}. State ids inside
// set arrays are sorted; output is byte-stable for a fixed input.
std::string emit_report(const AnalysisReport& report);

}  // namespace oimc

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oimc/analysis.hpp"
#include "oimc/graph.hpp"
#include "oimc/model_text.hpp"
#include "oimc/oracle.hpp"
#include "oimc/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitModel = 2;
constexpr int kExitMismatch = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw oimc::ModelError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

oimc::ModelDocument load_document(const std::string& path) {
  std::string text = read_file(path);
  try {
    return oimc::parse_model(text);
  } catch (const oimc::ParseError& e) {
    throw oimc::ModelError(path + ":" + std::to_string(e.line) + ": " + e.what());
  }
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// --target wins; otherwise the file's set named "target".
oimc::StateSet resolve_target(const oimc::ModelDocument& doc, const oimc::Imc& m,
                              const std::string& target_csv) {
  std::vector<std::string> names = split_names(target_csv);
  if (names.empty()) {
    auto it = doc.sets.find("target");
    if (it != doc.sets.end()) names = it->second;
  }
  if (names.empty())
    throw UsageError("no target states: pass --target or declare 'set target:' in the model");
  try {
    return m.set_of(names);
  } catch (const std::invalid_argument& e) {
    throw oimc::ModelError(e.what());
  }
}

void write_dot(const oimc::Imc& m, const std::string& path) {
  std::ostringstream out;
  out << "digraph imc {\n";
  for (int s = 0; s < m.state_count(); ++s)
    for (const auto& [t, iv] : m.row(s))
      out << "  \"" << m.id_of(s) << "\" -> \"" << m.id_of(t) << "\" [label=\"" << iv.str()
          << "\"];\n";
  out << "}\n";
  if (path == "-") {
    std::cout << out.str();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw oimc::ModelError("cannot write '" + path + "'");
  file << out.str();
}

nlohmann::json sorted_ids(const oimc::Imc& m, const oimc::StateSet& set) {
  std::vector<std::string> names;
  for (int i : set.indices()) names.push_back(m.id_of(i));
  std::sort(names.begin(), names.end());
  return nlohmann::json(names);
}

int run_validate(const std::string& model_path, const std::string& format,
                 const std::string& dot_path) {
  oimc::ModelDocument doc = load_document(model_path);
  oimc::Imc m = doc.to_imc();
  if (!dot_path.empty()) write_dot(m, dot_path);
  oimc::WellFormednessReport report = oimc::well_formed(m);
  if (format == "text") {
    for (int s = 0; s < m.state_count(); ++s) {
      const auto& c = report.per_state[s];
      std::cout << m.id_of(s) << ": " << (c.ok() ? "ok" : "ill-formed")
                << " (lower sum " << c.lo_sum.str() << ", upper sum " << c.hi_sum.str() << ")\n";
    }
    std::cout << (report.ok() ? "well formed\n" : "not well formed\n");
  } else {
    nlohmann::json j;
    j["well_formed"] = report.ok();
    nlohmann::json per_state;
    for (int s = 0; s < m.state_count(); ++s) {
      const auto& c = report.per_state[s];
      per_state[m.id_of(s)] = {{"1a", c.lo_sum_ok},
                               {"1b", c.lo_closed_ok},
                               {"2a", c.hi_sum_ok},
                               {"2b", c.hi_closed_ok},
                               {"lower_sum", c.lo_sum.str()},
                               {"upper_sum", c.hi_sum.str()}};
    }
    j["states"] = per_state;
    std::cout << j.dump(2) << "\n";
  }
  if (!report.ok()) {
    std::cerr << "error: " << report.first_violation(m.state_ids()) << "\n";
    return kExitModel;
  }
  return kExitOk;
}

int run_check(const std::string& model_path, const std::string& target_csv,
              const std::string& format, const std::string& dot_path) {
  oimc::ModelDocument doc = load_document(model_path);
  oimc::Imc m = doc.to_imc();
  if (!dot_path.empty()) write_dot(m, dot_path);
  oimc::StateSet target = resolve_target(doc, m, target_csv);
  oimc::AnalysisReport report = oimc::analyze(m, target);
  if (format == "text") {
    auto line = [&](const char* name, const oimc::StateSet& set) {
      std::cout << name << ":";
      for (const auto& id : sorted_ids(m, set)) std::cout << " " << id.get<std::string>();
      std::cout << "\n";
    };
    std::cout << "UMC semantics\n";
    line("  AQ0", report.umc.aq0);
    line("  EQ0", report.umc.eq0);
    line("  EQ1", report.umc.eq1);
    line("  AQ1", report.umc.aq1);
    std::cout << "IMDP semantics\n";
    line("  AQ0", report.imdp.aq0);
    line("  EQ0", report.imdp.eq0);
    line("  EQ1", report.imdp.eq1);
    line("  AQ1", report.imdp.aq1);
    std::cout << "end components avoiding target:";
    for (const auto& c : report.imdp.ilec_report.ilecs) {
      std::cout << " {";
      bool first = true;
      for (const auto& id : sorted_ids(m, c)) {
        std::cout << (first ? "" : ",") << id.get<std::string>();
        first = false;
      }
      std::cout << "}";
    }
    std::cout << "\n";
  } else {
    std::cout << oimc::emit_report(report);
  }
  return kExitOk;
}

int run_ilecs(const std::string& model_path, const std::string& target_csv,
              const std::string& format) {
  oimc::ModelDocument doc = load_document(model_path);
  oimc::Imc m = doc.to_imc();
  oimc::StateSet target = resolve_target(doc, m, target_csv);
  oimc::WellFormednessReport wf = oimc::well_formed(m);
  if (!wf.ok())
    throw oimc::ModelError("model is not well formed: " + wf.first_violation(m.state_ids()));
  oimc::IlecReport report = oimc::maximal_ilecs_avoiding(m.make_absorbing(target), target);
  if (format == "text") {
    for (const auto& c : report.ilecs) {
      std::cout << "{";
      bool first = true;
      for (const auto& id : sorted_ids(m, c)) {
        std::cout << (first ? "" : ",") << id.get<std::string>();
        first = false;
      }
      std::cout << "}\n";
    }
  } else {
    nlohmann::json j;
    nlohmann::json ilecs = nlohmann::json::array();
    for (const auto& c : report.ilecs) ilecs.push_back(sorted_ids(m, c));
    j["ilecs"] = ilecs;
    j["union"] = sorted_ids(m, report.z);
    j["rounds"] = report.rounds;
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_oracle(const oimc::RandomModelSpec& spec, std::uint64_t instances,
               const std::string& out_dir) {
  oimc::DifferentialReport report = oimc::differential_run(spec, instances);
  nlohmann::json j;
  j["instances"] = report.instances;
  j["mismatches"] = report.mismatches.size();
  j["spec"] = {{"states", spec.states},
               {"edge_density", spec.edge_density},
               {"denominator", spec.denominator},
               {"open_prob", spec.open_prob},
               {"seed", spec.seed}};
  nlohmann::json items = nlohmann::json::array();
  if (!report.mismatches.empty()) std::filesystem::create_directories(out_dir);
  for (const auto& mm : report.mismatches) {
    std::string name = "mismatch_" + std::to_string(mm.instance);
    std::filesystem::path model_path = std::filesystem::path(out_dir) / (name + ".imc");
    std::ofstream(model_path) << mm.model_text;
    std::filesystem::path verdict_path = std::filesystem::path(out_dir) / (name + ".json");
    nlohmann::json verdict = {{"instance", mm.instance},
                              {"target", mm.target},
                              {"detail", mm.detail},
                              {"model", model_path.string()}};
    std::ofstream(verdict_path) << verdict.dump(2) << "\n";
    items.push_back(verdict);
  }
  j["details"] = items;
  std::cout << j.dump(2) << "\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

int run_simulate(const std::string& model_path, const std::string& target_csv,
                 const std::string& scheduler, const std::string& start_id,
                 const std::string& floor, int horizon, long trials, std::uint64_t seed) {
  oimc::ModelDocument doc = load_document(model_path);
  oimc::Imc m = doc.to_imc();
  oimc::StateSet target = resolve_target(doc, m, target_csv);
  oimc::WellFormednessReport wf = oimc::well_formed(m);
  if (!wf.ok())
    throw oimc::ModelError("model is not well formed: " + wf.first_violation(m.state_ids()));

  oimc::SchedulerSpec spec;
  auto colon = scheduler.find(':');
  std::string kind = scheduler.substr(0, colon);
  std::string rate = colon == std::string::npos ? "" : scheduler.substr(colon + 1);
  if (kind == "constant") spec.kind = oimc::SchedulerSpec::Kind::Constant;
  else if (kind == "decaying") spec.kind = oimc::SchedulerSpec::Kind::Decaying;
  else throw UsageError("--scheduler expects constant:<rate> or decaying:<base>");
  if (rate.empty()) throw UsageError("--scheduler is missing its rate");
  try {
    spec.rate = oimc::Rational::parse(rate);
    spec.floor_scale = oimc::Rational::parse(floor);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.horizon = horizon;
  spec.trials = trials;
  spec.seed = seed;
  if (!start_id.empty()) {
    spec.start = m.index_of(start_id);
    if (spec.start < 0) throw oimc::ModelError("unknown state id '" + start_id + "'");
  }

  oimc::Estimate est;
  try {
    est = oimc::simulate_reach(m, target, spec);
  } catch (const std::domain_error& e) {
    throw oimc::ModelError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  nlohmann::json j;
  j["estimate"] = est.value;
  j["half_width"] = est.half_width;
  j["hits"] = est.hits;
  j["trials"] = est.trials;
  j["spec"] = {{"scheduler", kind + ":" + spec.rate.str()},
               {"floor", spec.floor_scale.str()},
               {"horizon", spec.horizon},
               {"seed", spec.seed},
               {"start", m.id_of(spec.start)}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qualitative reachability analysis for open interval Markov chains"};
  app.require_subcommand(1);

  std::string model_path, target_csv, format = "json", dot_path, out_dir = ".";
  std::string scheduler, start_id, floor = "1/2";
  int horizon = 200;
  long trials = 100000;
  std::uint64_t seed = 0, instances = 100;
  oimc::RandomModelSpec spec;

  CLI::App* validate = app.add_subcommand("validate", "check well-formedness of a model");
  validate->add_option("model", model_path, "model file (.imc)")->required();
  validate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  validate->add_option("--emit-dot", dot_path, "write the edge graph in DOT format ('-' for stdout)");

  CLI::App* check = app.add_subcommand("check", "qualitative reachability sets, both semantics");
  check->add_option("model", model_path)->required();
  check->add_option("--target", target_csv, "comma-separated target state ids");
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  check->add_option("--emit-dot", dot_path);

  CLI::App* ilecs = app.add_subcommand("ilecs", "maximal end components avoiding the target");
  ilecs->add_option("model", model_path)->required();
  ilecs->add_option("--target", target_csv);
  ilecs->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* oracle = app.add_subcommand("oracle", "differential run against the brute-force oracle");
  oracle->add_option("--states", spec.states)->check(CLI::PositiveNumber);
  oracle->add_option("--instances", instances);
  oracle->add_option("--seed", spec.seed);
  oracle->add_option("--density", spec.edge_density)->check(CLI::Range(0.0, 1.0));
  oracle->add_option("--denominator", spec.denominator)->check(CLI::PositiveNumber);
  oracle->add_option("--open-prob", spec.open_prob)->check(CLI::Range(0.0, 1.0));
  oracle->add_option("--out-dir", out_dir, "where mismatch counterexamples are written");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo scheduler simulation");
  simulate->add_option("model", model_path)->required();
  simulate->add_option("--target", target_csv);
  simulate->add_option("--scheduler", scheduler, "constant:<rate> or decaying:<base>")->required();
  simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
  simulate->add_option("--horizon", horizon)->check(CLI::NonNegativeNumber);
  simulate->add_option("--seed", seed);
  simulate->add_option("--start", start_id, "start state (default: first declared)");
  simulate->add_option("--floor", floor, "interior floor scale for decaying schedulers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(model_path, format, dot_path);
    if (check->parsed()) return run_check(model_path, target_csv, format, dot_path);
    if (ilecs->parsed()) return run_ilecs(model_path, target_csv, format);
    if (oracle->parsed()) return run_oracle(spec, instances, out_dir);
    if (simulate->parsed())
      return run_simulate(model_path, target_csv, scheduler, start_id, floor, horizon, trials,
                          seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const oimc::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModel;
  }
  return kExitUsage;
}

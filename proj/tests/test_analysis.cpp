#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "oimc/analysis.hpp"

using namespace oimc;
using testing::example1;
using testing::example2;
using testing::ids;

TEST_CASE("report serialization of the example 1 analysis") {
  Imc m = example1();
  AnalysisReport r = analyze(m, ids(m, {"s1"}));
  nlohmann::json j = nlohmann::json::parse(emit_report(r));
  CHECK(j["semantics"]["imdp"]["AQ1"] == nlohmann::json::array({"s1"}));
  CHECK(j["semantics"]["umc"]["AQ1"] == nlohmann::json::array({"s0", "s1"}));
  CHECK(j["ilecs"] == nlohmann::json::array({nlohmann::json::array({"s0"})}));
  CHECK(j["iterations"].contains("eq0"));
  CHECK(j["iterations"].contains("eq1_outer"));
}

TEST_CASE("report serialization of an empty target") {
  Imc m = example2();
  AnalysisReport r = analyze(m, StateSet(3));
  nlohmann::json j = nlohmann::json::parse(emit_report(r));
  nlohmann::json all = nlohmann::json::array({"s0", "s1", "s2"});
  nlohmann::json none = nlohmann::json::array();
  for (const char* sem : {"umc", "imdp"}) {
    CHECK(j["semantics"][sem]["AQ0"] == all);
    CHECK(j["semantics"][sem]["EQ0"] == all);
    CHECK(j["semantics"][sem]["EQ1"] == none);
    CHECK(j["semantics"][sem]["AQ1"] == none);
  }
}

TEST_CASE("report text is byte-stable") {
  Imc m = example2();
  AnalysisReport r1 = analyze(m, ids(m, {"s2"}));
  AnalysisReport r2 = analyze(m, ids(m, {"s2"}));
  CHECK(emit_report(r1) == emit_report(r2));
  // Keys arrive sorted.
  std::string text = emit_report(r1);
  CHECK(text.find("\"ilecs\"") < text.find("\"iterations\""));
  CHECK(text.find("\"iterations\"") < text.find("\"semantics\""));
  CHECK(text.find("\"imdp\"") < text.find("\"umc\""));
}

TEST_CASE("analysis refuses ill-formed models") {
  Imc m = testing::make_imc({"a", "b"},
                            {{"a", "b", "[0,0.5]"}, {"b", "b", "[1,1]"}});  // 2a fails at a
  CHECK_THROWS_AS(analyze(m, m.set_of({"b"})), ModelError);
}

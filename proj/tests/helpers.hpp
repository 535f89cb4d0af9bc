#pragma once

#include <string>
#include <vector>

#include "oimc/imc.hpp"
#include "oimc/model_text.hpp"

namespace testing {

inline oimc::Imc make_imc(std::vector<std::string> states,
                          std::vector<std::tuple<const char*, const char*, const char*>> edges) {
  oimc::Imc m(std::move(states));
  for (const auto& [src, dst, iv] : edges)
    m.set_delta(m.index_of(src), m.index_of(dst), oimc::Interval::parse(iv));
  return m;
}

// The two bundled reference chains, built inline so unit tests do not depend
// on file paths.
inline oimc::Imc example1() {
  return make_imc({"s0", "s1"}, {{"s0", "s0", "(0,1)"}, {"s0", "s1", "(0,1)"}, {"s1", "s1", "[1,1]"}});
}

inline oimc::Imc example2() {
  return make_imc({"s0", "s1", "s2"}, {{"s0", "s0", "(0,0.6)"},
                                       {"s0", "s1", "(0.5,1)"},
                                       {"s1", "s0", "[0.6,0.8]"},
                                       {"s1", "s1", "[0,0.5]"},
                                       {"s1", "s2", "(0,0.2]"},
                                       {"s2", "s2", "[1,1]"}});
}

inline oimc::StateSet ids(const oimc::Imc& m, std::vector<std::string> names) {
  return m.set_of(names);
}

}  // namespace testing

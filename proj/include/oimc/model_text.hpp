#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oimc/imc.hpp"

namespace oimc {

// Rejection of model text, carrying the 1-based line (and column when it is
// meaningful) of the offending input.
struct ParseError : std::runtime_error {
  ParseError(std::string message, int line, int column = 0)
      : std::runtime_error(std::move(message)), line(line), column(column) {}
  int line;
  int column;
};

struct TransitionLine {
  std::string src, dst;
  Interval interval;
  friend bool operator==(const TransitionLine&, const TransitionLine&) = default;
};

// Parsed form of a model file: the declared state list, the transition
// triples, and optional named state sets (a set named "target" acts as the
// default target for analysis commands).
struct ModelDocument {
  std::vector<std::string> states;
  std::vector<TransitionLine> transitions;
  std::map<std::string, std::vector<std::string>> sets;

  Imc to_imc() const;

  // Structural equality: same states (in order), same named sets, same
  // transition set regardless of line order.
  friend bool operator==(const ModelDocument& a, const ModelDocument& b);
};

// Line-oriented format:
//   states: s0 s1 s2
//   set target: s2
//   s0 -> s1 (0,0.2]
// Rationals are finite decimals or p/q; '#' starts a comment; omitted pairs
// default to [0,0]. CRLF input is accepted.
ModelDocument parse_model(std::string_view text);

// Canonical text: states line, named sets in name order, transitions sorted
// by declared state order, rationals rendered as p/q. parse(emit(d)) == d.
std::string emit_model(const ModelDocument& doc);

ModelDocument document_from_model(const Imc& m,
                                  const std::map<std::string, std::vector<std::string>>& sets = {});

}  // namespace oimc

#include "oimc/model_text.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace oimc {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::string_view strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

bool operator==(const ModelDocument& a, const ModelDocument& b) {
  if (a.states != b.states || a.sets != b.sets) return false;
  auto key = [](const TransitionLine& t) { return std::tie(t.src, t.dst); };
  auto sorted = [&](const std::vector<TransitionLine>& v) {
    std::vector<TransitionLine> s = v;
    std::sort(s.begin(), s.end(),
              [&](const TransitionLine& x, const TransitionLine& y) { return key(x) < key(y); });
    return s;
  };
  return sorted(a.transitions) == sorted(b.transitions);
}

ModelDocument parse_model(std::string_view text) {
  ModelDocument doc;
  std::set<std::string> declared;
  std::set<std::pair<std::string, std::string>> seen_transitions;
  bool have_states = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = strip(raw);
    if (line.empty()) continue;

    auto require_declared = [&](const std::string& id) {
      if (!declared.count(id))
        throw ParseError("undeclared state '" + id + "'", line_no);
    };

    if (line.rfind("states:", 0) == 0) {
      if (have_states) throw ParseError("duplicate states declaration", line_no);
      have_states = true;
      for (auto& id : split_ws(line.substr(7))) {
        if (!declared.insert(id).second)
          throw ParseError("duplicate state id '" + id + "'", line_no);
        doc.states.push_back(std::move(id));
      }
      if (doc.states.empty()) throw ParseError("empty states declaration", line_no);
      continue;
    }

    if (line.rfind("set ", 0) == 0) {
      std::string_view rest = line.substr(4);
      std::size_t colon = rest.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("malformed set declaration (missing ':')", line_no);
      std::string name(strip(rest.substr(0, colon)));
      if (name.empty()) throw ParseError("set declaration without a name", line_no);
      if (doc.sets.count(name))
        throw ParseError("duplicate set '" + name + "'", line_no);
      std::vector<std::string> members = split_ws(rest.substr(colon + 1));
      for (const auto& id : members) require_declared(id);
      doc.sets.emplace(std::move(name), std::move(members));
      continue;
    }

    std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("expected 'states:', 'set ...:' or a transition line",
                       line_no, static_cast<int>(raw.find_first_not_of(" \t")) + 1);
    std::string src(strip(line.substr(0, arrow)));
    std::string_view rest = strip(line.substr(arrow + 2));
    std::size_t id_end = rest.find_first_of(" \t");
    if (src.empty() || id_end == std::string_view::npos)
      throw ParseError("malformed transition line", line_no);
    std::string dst(rest.substr(0, id_end));
    std::string_view interval_text = strip(rest.substr(id_end));
    require_declared(src);
    require_declared(dst);
    if (!seen_transitions.emplace(src, dst).second)
      throw ParseError("duplicate transition " + src + " -> " + dst, line_no);
    Interval iv = [&] {
      try {
        return Interval::parse(interval_text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no,
                         static_cast<int>(line.size() - interval_text.size()) + 1);
      }
    }();
    doc.transitions.push_back({std::move(src), std::move(dst), std::move(iv)});
  }

  if (!have_states) throw ParseError("missing states declaration", line_no);
  return doc;
}

Imc ModelDocument::to_imc() const {
  Imc m(states);
  for (const auto& t : transitions)
    m.set_delta(m.index_of(t.src), m.index_of(t.dst), t.interval);
  return m;
}

std::string emit_model(const ModelDocument& doc) {
  std::ostringstream out;
  out << "states:";
  for (const auto& id : doc.states) out << ' ' << id;
  out << '\n';
  for (const auto& [name, members] : doc.sets) {
    out << "set " << name << ':';
    for (const auto& id : members) out << ' ' << id;
    out << '\n';
  }
  std::map<std::string, int> order;
  for (int i = 0; i < static_cast<int>(doc.states.size()); ++i) order[doc.states[i]] = i;
  std::vector<const TransitionLine*> lines;
  for (const auto& t : doc.transitions) lines.push_back(&t);
  std::sort(lines.begin(), lines.end(), [&](const TransitionLine* a, const TransitionLine* b) {
    return std::pair(order[a->src], order[a->dst]) < std::pair(order[b->src], order[b->dst]);
  });
  for (const TransitionLine* t : lines)
    out << t->src << " -> " << t->dst << ' ' << t->interval.str() << '\n';
  return out.str();
}

ModelDocument document_from_model(
    const Imc& m, const std::map<std::string, std::vector<std::string>>& sets) {
  ModelDocument doc;
  doc.states = m.state_ids();
  doc.sets = sets;
  for (int s = 0; s < m.state_count(); ++s)
    for (const auto& [t, iv] : m.row(s))
      doc.transitions.push_back({m.id_of(s), m.id_of(t), iv});
  return doc;
}

}  // namespace oimc

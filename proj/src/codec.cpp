#include "tvdance/codec.hpp"

#include <limits>

#include <json.hpp>

#include "tvdance/scheduler.hpp"

namespace tvdance {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Lex: return "LexError";
    case ParseErrorKind::DuplicateStrand: return "DuplicateStrand";
    case ParseErrorKind::UnpairedCrossing: return "UnpairedCrossing";
    case ParseErrorKind::SignMismatch: return "SignMismatch";
    case ParseErrorKind::DuplicateBar: return "DuplicateBar";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::vector<SourceSpan> spans, const std::string& what)
    : std::runtime_error(what), kind_(kind), spans_(std::move(spans)) {}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n'; }
bool is_sep(char c) { return is_ws(c) || c == ','; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void lex_error(std::string_view text, std::size_t begin, std::size_t end, const std::string& why) {
  throw ParseError(ParseErrorKind::Lex, {SourceSpan{begin, end}},
                   why + " at bytes " + std::to_string(begin) + ".." + std::to_string(end) + ": '" +
                       std::string(text.substr(begin, end - begin)) + "'");
}

// INT := [1-9][0-9]*, fitting 32 bits. Returns the number of bytes consumed.
std::size_t lex_int(std::string_view tok, std::size_t at, std::uint32_t& value) {
  if (at >= tok.size() || tok[at] < '1' || tok[at] > '9') return 0;
  std::uint64_t v = 0;
  std::size_t i = at;
  while (i < tok.size() && is_digit(tok[i])) {
    v = v * 10 + static_cast<std::uint64_t>(tok[i] - '0');
    if (v > std::numeric_limits<std::uint32_t>::max()) return 0;
    ++i;
  }
  value = static_cast<std::uint32_t>(v);
  return i - at;
}

ParseErrorKind from_diagram_kind(DiagramErrorKind k) {
  switch (k) {
    case DiagramErrorKind::DuplicateStrand: return ParseErrorKind::DuplicateStrand;
    case DiagramErrorKind::UnpairedCrossing: return ParseErrorKind::UnpairedCrossing;
    case DiagramErrorKind::SignMismatch: return ParseErrorKind::SignMismatch;
    case DiagramErrorKind::DuplicateBar: return ParseErrorKind::DuplicateBar;
    default: break;
  }
  return ParseErrorKind::Lex;
}

}  // namespace

Diagram parse(std::string_view text) {
  std::vector<Event> events;
  std::vector<SourceSpan> spans;
  BarId next_bar = 1;

  std::size_t i = 0;
  while (i < text.size() && is_ws(text[i])) ++i;
  std::size_t tail = text.size();
  while (tail > i && is_ws(text[tail - 1])) --tail;

  while (i < tail) {
    if (!events.empty()) {
      const std::size_t sep_start = i;
      while (i < tail && is_sep(text[i])) ++i;
      if (i == sep_start) lex_error(text, sep_start, sep_start, "missing separator");
    } else if (text[i] == ',') {
      std::size_t j = i;
      while (j < tail && is_sep(text[j])) ++j;
      lex_error(text, i, j, "separator before first event");
    }
    if (i >= tail) lex_error(text, i, i, "trailing separator");

    const std::size_t start = i;
    while (i < tail && !is_sep(text[i])) ++i;
    const std::string_view tok = text.substr(start, i - start);

    std::uint32_t id = 0;
    const char head = tok[0];
    if (head == 'O' || head == 'U') {
      const std::size_t digits = lex_int(tok, 1, id);
      if (digits == 0) lex_error(text, start, i, "expected crossing number");
      std::size_t at = 1 + digits;
      CrossingSign sign = CrossingSign::Positive;
      if (at < tok.size() && (tok[at] == '+' || tok[at] == '-')) {
        sign = tok[at] == '+' ? CrossingSign::Positive : CrossingSign::Negative;
        ++at;
      }
      if (at != tok.size()) lex_error(text, start, i, "unexpected characters in classical pass");
      events.emplace_back(ClassicalPass{id, head == 'O' ? Strand::Over : Strand::Under, sign});
    } else if (head == 'V') {
      const std::size_t digits = lex_int(tok, 1, id);
      if (digits == 0 || 1 + digits != tok.size()) lex_error(text, start, i, "malformed virtual pass");
      events.emplace_back(VirtualPass{id});
    } else if (head == 'T') {
      if (tok.size() == 1) {
        id = next_bar++;
      } else {
        const std::size_t digits = lex_int(tok, 1, id);
        if (digits == 0 || 1 + digits != tok.size()) lex_error(text, start, i, "malformed twist bar");
      }
      events.emplace_back(TwistBar{id});
    } else {
      lex_error(text, start, i, "unknown token");
    }
    spans.push_back(SourceSpan{start, i});
  }

  try {
    return Diagram::validate(std::move(events));
  } catch (const DiagramError& e) {
    std::vector<SourceSpan> at;
    for (std::size_t p : e.positions()) at.push_back(spans.at(p));
    std::string where;
    for (const auto& s : at) {
      where += (where.empty() ? " at bytes " : ", ") + std::to_string(s.byte_start) + ".." +
               std::to_string(s.byte_end);
    }
    throw ParseError(from_diagram_kind(e.kind()), std::move(at), std::string(e.what()) + where);
  }
}

std::string event_token(const Event& event) {
  if (const auto* c = std::get_if<ClassicalPass>(&event)) {
    return std::string(c->strand == Strand::Over ? "O" : "U") + std::to_string(c->crossing) +
           (c->sign == CrossingSign::Positive ? "+" : "-");
  }
  if (const auto* v = std::get_if<VirtualPass>(&event)) return "V" + std::to_string(v->crossing);
  return "T" + std::to_string(std::get<TwistBar>(event).bar);
}

std::string serialize(const Diagram& diagram) {
  std::string out;
  for (const Event& e : diagram.events()) {
    if (!out.empty()) out += ' ';
    out += event_token(e);
  }
  return out;
}

namespace {

const char* facing_name(Facing f) { return f == Facing::Forward ? "forward" : "backward"; }

nlohmann::json steps_json(const Schedule& schedule, const Diagram& diagram) {
  auto steps = nlohmann::json::array();
  for (std::size_t t = 0; t < schedule.steps.size(); ++t) {
    const Step& s = schedule.steps[t];
    steps.push_back({{"t", t},
                     {"dancer", s.dancer},
                     {"event_index", s.event_index},
                     {"event", event_token(diagram[s.event_index])},
                     {"facing", facing_name(s.facing)}});
  }
  return steps;
}

}  // namespace

std::string trace_to_json(const Schedule& schedule, const Diagram& diagram) {
  nlohmann::json j;
  j["feasible"] = schedule.feasible;
  j["steps"] = steps_json(schedule, diagram);
  return j.dump();
}

std::string trace_to_json(const Schedule& schedule, const DancePlan& plan,
                          std::optional<std::string> infeasible_reason) {
  nlohmann::json j;
  j["feasible"] = schedule.feasible && !infeasible_reason;
  j["steps"] = steps_json(schedule, plan.diagram());
  nlohmann::json p;
  p["points"] = plan.points();
  p["k"] = plan.laps();
  p["rule"] = plan.is_matching() ? "matching" : "forward";
  p["crossing"] = to_string(plan.crossing_rule());
  if (const auto* m = std::get_if<MatchingRule>(&plan.rule())) {
    auto facings = nlohmann::json::array();
    for (Facing f : m->facings) facings.push_back(facing_name(f));
    p["facings"] = facings;
  }
  j["plan"] = p;
  if (infeasible_reason) j["reason"] = *infeasible_reason;
  return j.dump();
}

}  // namespace tvdance

#ifndef TVDANCE_CODEC_HPP
#define TVDANCE_CODEC_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tvdance/model.hpp"

namespace tvdance {

struct Schedule;
class DancePlan;

// Half-open byte range into the parsed input.
struct SourceSpan {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind {
  Lex,
  DuplicateStrand,
  UnpairedCrossing,
  SignMismatch,
  DuplicateBar,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, std::vector<SourceSpan> spans, const std::string& what);

  ParseErrorKind kind() const noexcept { return kind_; }
  const std::vector<SourceSpan>& spans() const noexcept { return spans_; }

private:
  ParseErrorKind kind_;
  std::vector<SourceSpan> spans_;
};

// Twisted virtual Gauss code:
//   diagram := event ((','|WS)+ event)*
//   event   := ('O'|'U') INT SIGN? | 'V' INT | 'T' INT?
//   SIGN    := '+'|'-'      INT := [1-9][0-9]*
// Leading and trailing whitespace is ignored. Bars without an id are numbered
// 1, 2, ... in reading order.
Diagram parse(std::string_view text);

// Canonical form: single spaces, explicit signs, explicit bar ids.
std::string serialize(const Diagram& diagram);

std::string event_token(const Event& event);

// Trace JSON. The diagram supplies event tokens; the plan, when given, is
// echoed under "plan".
std::string trace_to_json(const Schedule& schedule, const Diagram& diagram);
std::string trace_to_json(const Schedule& schedule, const DancePlan& plan,
                          std::optional<std::string> infeasible_reason = std::nullopt);

}  // namespace tvdance

#endif  // TVDANCE_CODEC_HPP

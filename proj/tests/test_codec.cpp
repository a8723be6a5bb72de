#include "doctest.h"

#include <random>

#include <json.hpp>

#include "support/generators.hpp"
#include "tvdance/codec.hpp"
#include "tvdance/scheduler.hpp"

using namespace tvdance;
using tvdance::testing::code;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected ParseError for '" << text << "'");
  return ParseError(ParseErrorKind::Lex, {}, "");
}

}  // namespace

TEST_CASE("parse the trefoil") {
  const Diagram d = parse("O1+ U2+ O3+ U1+ O2+ U3+");
  REQUIRE(d.size() == 6);
  CHECK(d[0] == Event{ClassicalPass{1, Strand::Over, CrossingSign::Positive}});
  CHECK(d[3] == Event{ClassicalPass{1, Strand::Under, CrossingSign::Positive}});
}

TEST_CASE("parse a bare twist bar") {
  const Diagram d = parse("T");
  REQUIRE(d.size() == 1);
  CHECK(d[0] == Event{TwistBar{1}});
}

TEST_CASE("implicit twist bar ids count up in reading order") {
  CHECK(serialize(parse("T O1 T U1 T")) == "T1 O1+ T2 U1+ T3");
  CHECK(parse_error("T1 T").kind() == ParseErrorKind::DuplicateBar);
}

TEST_CASE("separators and defaults") {
  CHECK(serialize(parse("O1,U1")) == "O1+ U1+");
  CHECK(serialize(parse("O1-,\t U1-\nV2 ,, V2")) == "O1- U1- V2 V2");
  CHECK(serialize(parse("  O1 U1\n")) == "O1+ U1+");
  CHECK(parse("").empty());
  CHECK(parse(" \n\t").empty());
}

TEST_CASE("lex errors carry the token span") {
  const auto e = parse_error("O1+ X9 U1+");
  CHECK(e.kind() == ParseErrorKind::Lex);
  REQUIRE(e.spans().size() == 1);
  CHECK(e.spans()[0] == SourceSpan{4, 6});

  CHECK(parse_error("O0 U0").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("O01 U01").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("O1+U1+").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("o1 u1").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("V").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("V1+ V1+").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("T0").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("O1++ U1").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("O1 U1,").kind() == ParseErrorKind::Lex);
  CHECK(parse_error(",O1 U1").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("O1 U1\r").kind() == ParseErrorKind::Lex);
  CHECK(parse_error("O99999999999 U99999999999").kind() == ParseErrorKind::Lex);
}

TEST_CASE("model errors are mapped to token spans") {
  const auto e = parse_error("O1+ O1+");
  CHECK(e.kind() == ParseErrorKind::DuplicateStrand);
  CHECK(e.spans() == std::vector<SourceSpan>{{0, 3}, {4, 7}});

  const auto s = parse_error("O1+  U1-");
  CHECK(s.kind() == ParseErrorKind::SignMismatch);
  CHECK(s.spans() == std::vector<SourceSpan>{{0, 3}, {5, 8}});

  CHECK(parse_error("O1 U1 V2").kind() == ParseErrorKind::UnpairedCrossing);
}

TEST_CASE("serialize canonical forms") {
  CHECK(serialize(code("O1+ U2+ O3+ U1+ O2+ U3+")) == "O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(serialize(Diagram{}) == "");
  CHECK(serialize(Diagram::validate({TwistBar{1}, TwistBar{2}})) == "T1 T2");
}

TEST_CASE("property: parse . serialize is the identity, serialize . parse is idempotent") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Diagram d = tvdance::testing::random_diagram(rng, rng() % 14);
    const std::string s = serialize(d);
    CHECK(parse(s) == d);
    CHECK(serialize(parse(s)) == s);
  }
}

TEST_CASE("trace JSON") {
  SUBCASE("empty schedule") {
    const auto j = nlohmann::json::parse(trace_to_json(Schedule{}, Diagram{}));
    CHECK(j == nlohmann::json::parse(R"({"steps":[],"feasible":true})"));
  }
  SUBCASE("trefoil witness with plan") {
    const DancePlan plan(code("O1+ U2+ O3+ U1+ O2+ U3+"), {0, 3}, 1);
    const auto schedule = std::get<Schedule>(schedule_search(plan));
    const auto j = nlohmann::json::parse(trace_to_json(schedule, plan));
    CHECK(j["feasible"] == true);
    REQUIRE(j["steps"].size() == 6);
    for (std::size_t t = 0; t < 6; ++t) {
      CHECK(j["steps"][t]["t"] == t);
      CHECK(j["steps"][t]["facing"] == "forward");
    }
    CHECK(j["steps"][0]["event"] == "O1+");
    CHECK(j["steps"][1]["event"] == "U1+");
    CHECK(j["steps"][1]["dancer"] == 1);
    CHECK(j["plan"]["points"] == nlohmann::json::array({0, 3}));
    CHECK(j["plan"]["k"] == 1);
    CHECK(j["plan"]["rule"] == "forward");
    CHECK_FALSE(j["plan"].contains("facings"));
  }
  SUBCASE("matching plan echoes facings") {
    const DancePlan plan(code("T1 O1 U1 T2"), {0, 1}, 1,
                         MatchingRule{{Facing::Forward, Facing::Backward}});
    const auto schedule = std::get<Schedule>(schedule_search(plan));
    const auto j = nlohmann::json::parse(trace_to_json(schedule, plan));
    CHECK(j["plan"]["facings"] == nlohmann::json::array({"forward", "backward"}));
    CHECK(j["steps"][0]["facing"] == "backward");
  }
  SUBCASE("projection onto one dancer lists its route in order") {
    const DancePlan plan(code("O1+ U2+ O3+ T1 U1+ O2+ U3+"), {0, 4}, 4);
    const auto schedule = std::get<Schedule>(schedule_search(plan));
    const auto j = nlohmann::json::parse(trace_to_json(schedule, plan));
    const auto routes = routes_of(plan);
    for (std::size_t d = 0; d < routes.size(); ++d) {
      std::vector<std::size_t> seen;
      for (const auto& s : j["steps"]) {
        if (s["dancer"] == d) seen.push_back(s["event_index"].get<std::size_t>());
      }
      CHECK(seen == routes[d]);
    }
  }
}

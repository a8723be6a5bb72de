#include "tvdance/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tvdance/codec.hpp"
#include "tvdance/facing.hpp"
#include "tvdance/scheduler.hpp"
#include "tvdance/solver.hpp"
#include "tvdance/timeline.hpp"

namespace tvdance::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o || !(o << text)) throw IoError("cannot write " + path);
}

// Diagram text from --diagram / positional or --file; exactly one is allowed.
struct DiagramSource {
  std::string text;
  std::string file;
  CLI::Option* text_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  std::string load() const {
    const bool has_text = text_opt->count() > 0;
    const bool has_file = file_opt->count() > 0;
    if (has_text == has_file) throw UsageError("give the diagram either inline or with --file");
    return has_text ? text : read_file(file);
  }
};

void print_parse_error(std::ostream& err, const std::string& text, const ParseError& e) {
  err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
  if (e.spans().empty() || text.find('\n') != std::string::npos) return;
  std::string marks(text.size(), ' ');
  for (const auto& s : e.spans()) {
    for (std::size_t b = s.byte_start; b < s.byte_end && b < marks.size(); ++b) marks[b] = '^';
    if (s.byte_start == s.byte_end && s.byte_start <= marks.size()) {
      if (s.byte_start == marks.size()) marks.push_back('^');
      else marks[s.byte_start] = '^';
    }
  }
  while (!marks.empty() && marks.back() == ' ') marks.pop_back();
  err << "  " << text << "\n  " << marks << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

GapSet parse_points(const std::string& s) {
  GapSet points;
  for (const auto& item : split_list(s)) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError("--points expects comma-separated gap indices, got '" + s + "'");
    }
    points.push_back(std::stoul(item));
  }
  return points;
}

FacingAssignment parse_facings(const std::string& s) {
  FacingAssignment f;
  for (const auto& item : split_list(s)) {
    if (item == "F") f.push_back(Facing::Forward);
    else if (item == "B") f.push_back(Facing::Backward);
    else throw UsageError("--facings expects comma-separated F/B, got '" + s + "'");
  }
  return f;
}

std::string join_points(const GapSet& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out;
}

std::string join_facings(const FacingAssignment& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += std::string(i ? "," : "") + facing_letter(f[i]);
  return out;
}

const std::map<std::string, CrossingRule> kCrossingNames = {
    {"over-first", CrossingRule::OverFirst},
    {"under-first", CrossingRule::UnderFirst},
    {"unrestricted", CrossingRule::Unrestricted},
};
const std::map<std::string, RuleKind> kRuleNames = {
    {"forward", RuleKind::Forward},
    {"matching", RuleKind::Matching},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Danceability of twisted virtual knot diagrams"};
  app.require_subcommand(1);

  // validate
  DiagramSource v_src;
  auto* validate = app.add_subcommand("validate", "Parse a diagram and print its canonical form");
  v_src.text_opt = validate->add_option("diagram", v_src.text, "Gauss code, e.g. \"O1+ U2+ T1\"");
  v_src.file_opt = validate->add_option("--file", v_src.file, "Read the diagram from a file");

  // dance
  DiagramSource d_src;
  std::string d_points, d_facings, d_json, d_svg;
  std::size_t d_laps = 1;
  RuleKind d_rule = RuleKind::Forward;
  CrossingRule d_crossing = CrossingRule::OverFirst;
  auto* dance = app.add_subcommand("dance", "Schedule one dance plan");
  d_src.text_opt = dance->add_option("--diagram", d_src.text, "Gauss code");
  d_src.file_opt = dance->add_option("--file", d_src.file, "Read the diagram from a file");
  dance->add_option("--points", d_points, "Initial points as gap indices, e.g. 0,3")->required();
  dance->add_option("--k", d_laps, "Paths each dancer traverses")->check(CLI::PositiveNumber);
  dance->add_option("--rule", d_rule, "forward | matching")
      ->transform(CLI::CheckedTransformer(kRuleNames, CLI::ignore_case));
  auto* d_facings_opt = dance->add_option("--facings", d_facings, "Designated facings, e.g. F,B,F");
  dance->add_option("--crossing", d_crossing, "over-first | under-first | unrestricted")
      ->transform(CLI::CheckedTransformer(kCrossingNames, CLI::ignore_case));
  dance->add_option("--json", d_json, "Write the trace JSON here");
  dance->add_option("--svg", d_svg, "Write an SVG timeline here");

  // solve
  DiagramSource s_src;
  RuleKind s_rule = RuleKind::Forward;
  CrossingRule s_crossing = CrossingRule::OverFirst;
  std::size_t s_max_n = 4, s_max_k = 4;
  std::string s_json;
  auto* solve = app.add_subcommand("solve", "Find the minimal dancer count (then lap count)");
  s_src.text_opt = solve->add_option("--diagram", s_src.text, "Gauss code");
  s_src.file_opt = solve->add_option("--file", s_src.file, "Read the diagram from a file");
  solve->add_option("--rule", s_rule, "forward | matching")
      ->transform(CLI::CheckedTransformer(kRuleNames, CLI::ignore_case));
  solve->add_option("--crossing", s_crossing, "over-first | under-first | unrestricted")
      ->transform(CLI::CheckedTransformer(kCrossingNames, CLI::ignore_case));
  solve->add_option("--max-n", s_max_n, "Largest dancer count to try")->check(CLI::PositiveNumber);
  solve->add_option("--max-k", s_max_k, "Largest lap count to try")->check(CLI::PositiveNumber);
  solve->add_option("--json", s_json, "Write the witness trace JSON here");

  // survey
  DiagramSource v2_src;
  RuleKind v_rule = RuleKind::Forward;
  CrossingRule v_crossing = CrossingRule::OverFirst;
  std::size_t v_n = 1, v_k = 1;
  bool v_all = false;
  auto* surv = app.add_subcommand("survey", "Tabulate every placement for fixed n and k");
  v2_src.text_opt = surv->add_option("--diagram", v2_src.text, "Gauss code");
  v2_src.file_opt = surv->add_option("--file", v2_src.file, "Read the diagram from a file");
  surv->add_option("--rule", v_rule, "forward | matching")
      ->transform(CLI::CheckedTransformer(kRuleNames, CLI::ignore_case));
  surv->add_option("--crossing", v_crossing, "over-first | under-first | unrestricted")
      ->transform(CLI::CheckedTransformer(kCrossingNames, CLI::ignore_case));
  surv->add_option("--n", v_n, "Dancer count")->check(CLI::PositiveNumber);
  surv->add_option("--k", v_k, "Lap count")->check(CLI::PositiveNumber);
  surv->add_flag("--all-facings", v_all, "Matching rule: one row per facing assignment");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string text;
  try {
    if (validate->parsed()) {
      text = v_src.load();
      try {
        out << serialize(parse(text)) << "\n";
        return kOk;
      } catch (const ParseError& e) {
        print_parse_error(err, text, e);
        return kNegative;
      }
    }

    const DiagramSource& src = dance->parsed() ? d_src : solve->parsed() ? s_src : v2_src;
    text = src.load();
    const Diagram diagram = parse(text);

    if (dance->parsed()) {
      DanceRule rule = ForwardRule{};
      if (d_rule == RuleKind::Matching) {
        if (d_facings_opt->count() == 0) throw UsageError("--rule matching requires --facings");
        rule = MatchingRule{parse_facings(d_facings)};
      } else if (d_facings_opt->count() > 0) {
        throw UsageError("--facings only applies to --rule matching");
      }
      const DancePlan plan(diagram, parse_points(d_points), d_laps, std::move(rule), d_crossing);
      const SearchOutcome outcome = schedule_search(plan);
      if (const auto* s = std::get_if<Schedule>(&outcome)) {
        out << "FEASIBLE n=" << plan.dancers() << " k=" << plan.laps() << " steps=" << s->steps.size()
            << "\n";
        if (!d_json.empty()) write_file(d_json, trace_to_json(*s, plan));
        if (!d_svg.empty()) write_file(d_svg, svg_timeline(*s, diagram));
        return kOk;
      }
      const auto& bad = std::get<Infeasible>(outcome);
      out << "INFEASIBLE(" << to_string(bad.reason) << ") states_explored=" << bad.states_explored << "\n";
      if (!d_json.empty()) write_file(d_json, trace_to_json(Schedule{{}, false}, plan, to_string(bad.reason)));
      if (!d_svg.empty()) write_file(d_svg, svg_timeline(Schedule{{}, false}, diagram));
      return kNegative;
    }

    if (solve->parsed()) {
      const SolveReport report = min_dancers(diagram, s_rule, s_crossing, s_max_k, s_max_n);
      if (!report.outcome) {
        out << "EXHAUSTED n<=" << report.n_searched.last << " k<=" << report.k_searched.last
            << " plans_tried=" << report.placements_tried << "\n";
        if (!s_json.empty()) write_file(s_json, trace_to_json(Schedule{{}, false}, diagram));
        return kNegative;
      }
      const DancePlan& plan = report.outcome->plan;
      out << "FEASIBLE n=" << plan.dancers() << " k=" << plan.laps() << " points=" << join_points(plan.points());
      if (const auto* m = std::get_if<MatchingRule>(&plan.rule())) out << " facings=" << join_facings(m->facings);
      out << " plans_tried=" << report.placements_tried << "\n";
      if (!s_json.empty()) write_file(s_json, trace_to_json(report.outcome->schedule, plan));
      return kOk;
    }

    const auto rows = survey(diagram, v_rule, v_crossing, v_n, v_k, v_all);
    bool any = false;
    for (const auto& row : rows) {
      out << join_points(row.placement);
      if (row.facings) out << " facings=" << join_facings(*row.facings);
      out << " " << (row.feasible ? "FEASIBLE" : std::string("INFEASIBLE(") + to_string(*row.reason) + ")")
          << "\n";
      any = any || row.feasible;
    }
    return any ? kOk : kNegative;
  } catch (const ParseError& e) {
    print_parse_error(err, text, e);
    return kUsage;
  } catch (const DiagramError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace tvdance::cli

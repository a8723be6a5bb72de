#include "tvdance/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvdance {

std::vector<GapSet> placements(std::size_t gap_count, std::size_t n) {
  std::vector<GapSet> out;
  if (n == 0 || n > gap_count) return out;
  GapSet current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    std::size_t i = n;
    while (i > 0 && current[i - 1] == gap_count - n + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < n; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

namespace {

std::optional<DanceRule> rule_for(RuleKind kind, const Diagram& diagram, const GapSet& points,
                                  std::size_t laps) {
  if (kind == RuleKind::Forward) return ForwardRule{};
  auto facings = matching_solve(parity_vector(diagram, points), laps);
  if (!facings) return std::nullopt;
  return MatchingRule{std::move(*facings)};
}

}  // namespace

SolveReport min_dancers(const Diagram& diagram, RuleKind rule_kind, CrossingRule crossing_rule,
                        std::size_t max_laps, std::size_t max_dancers) {
  if (max_laps == 0 || max_dancers == 0) throw std::invalid_argument("bounds must be at least 1");
  max_dancers = std::min(max_dancers, diagram.gap_count());

  SolveReport report;
  report.n_searched = {1, 0};
  report.k_searched = {1, 0};
  for (std::size_t n = 1; n <= max_dancers; ++n) {
    report.n_searched.last = n;
    const auto candidates = placements(diagram.gap_count(), n);
    for (std::size_t k = 1; k <= max_laps; ++k) {
      report.k_searched.last = std::max(report.k_searched.last, k);
      for (const GapSet& points : candidates) {
        ++report.placements_tried;
        auto rule = rule_for(rule_kind, diagram, points, k);
        if (!rule) continue;
        DancePlan plan(diagram, points, k, std::move(*rule), crossing_rule);
        auto outcome = schedule_search(plan);
        if (auto* s = std::get_if<Schedule>(&outcome)) {
          report.outcome = FeasiblePlan{std::move(plan), std::move(*s)};
          return report;
        }
      }
    }
  }
  return report;
}

std::vector<SurveyRow> survey(const Diagram& diagram, RuleKind rule_kind, CrossingRule crossing_rule,
                              std::size_t n, std::size_t laps, bool all_facings) {
  if (n == 0 || n > diagram.gap_count()) {
    throw std::invalid_argument("survey: n must be between 1 and the gap count");
  }
  auto row_for = [&](const GapSet& points, DanceRule rule) {
    SurveyRow row;
    row.placement = points;
    if (const auto* m = std::get_if<MatchingRule>(&rule)) row.facings = m->facings;
    const auto outcome = schedule_search(DancePlan(diagram, points, laps, std::move(rule), crossing_rule));
    row.feasible = is_feasible(outcome);
    if (const auto* bad = std::get_if<Infeasible>(&outcome)) row.reason = bad->reason;
    return row;
  };

  std::vector<SurveyRow> rows;
  for (const GapSet& points : placements(diagram.gap_count(), n)) {
    if (rule_kind == RuleKind::Forward) {
      rows.push_back(row_for(points, ForwardRule{}));
    } else if (all_facings) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        FacingAssignment f(n);
        for (std::size_t i = 0; i < n; ++i) {
          f[i] = (mask >> (n - 1 - i)) & 1 ? Facing::Backward : Facing::Forward;
        }
        rows.push_back(row_for(points, MatchingRule{std::move(f)}));
      }
    } else if (auto f = matching_solve(parity_vector(diagram, points), laps)) {
      rows.push_back(row_for(points, MatchingRule{std::move(*f)}));
    } else {
      rows.push_back(SurveyRow{points, std::nullopt, false, InfeasibleReason::FacingParity});
    }
  }
  return rows;
}

}  // namespace tvdance

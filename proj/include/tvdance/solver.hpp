#ifndef TVDANCE_SOLVER_HPP
#define TVDANCE_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tvdance/model.hpp"
#include "tvdance/scheduler.hpp"

namespace tvdance {

enum class RuleKind { Forward, Matching };

// All n-element gap subsets of 0..gap_count-1 in lexicographic order, each
// sorted ascending.
std::vector<GapSet> placements(std::size_t gap_count, std::size_t n);

struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive; first > last means nothing searched
};

struct FeasiblePlan {
  DancePlan plan;
  Schedule schedule;
};

struct SolveReport {
  std::optional<FeasiblePlan> outcome;  // nullopt: bounds exhausted
  IndexRange n_searched;
  IndexRange k_searched;
  std::size_t placements_tried = 0;  // (placement, k) plans handed to the scheduler

  bool feasible() const noexcept { return outcome.has_value(); }
};

// Smallest n, then smallest k, then lexicographically first placement that
// dances. Matching plans take their facings from matching_solve. max_dancers
// beyond the gap count is clamped.
SolveReport min_dancers(const Diagram& diagram, RuleKind rule_kind, CrossingRule crossing_rule,
                        std::size_t max_laps, std::size_t max_dancers);

struct SurveyRow {
  GapSet placement;
  std::optional<FacingAssignment> facings;  // matching rule only
  bool feasible = false;
  std::optional<InfeasibleReason> reason;
};

// One row per placement for fixed n and k. For the matching rule, either one
// solved assignment per placement or, with all_facings, one row per each of
// the 2^n assignments.
std::vector<SurveyRow> survey(const Diagram& diagram, RuleKind rule_kind, CrossingRule crossing_rule,
                              std::size_t n, std::size_t laps, bool all_facings = false);

}  // namespace tvdance

#endif  // TVDANCE_SOLVER_HPP

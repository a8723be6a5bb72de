#ifndef TVDANCE_SCHEDULER_HPP
#define TVDANCE_SCHEDULER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tvdance/facing.hpp"
#include "tvdance/model.hpp"

namespace tvdance {

enum class CrossingRule : std::uint8_t { OverFirst, UnderFirst, Unrestricted };

const char* to_string(CrossingRule rule);

// All dancers start and end facing forward.
struct ForwardRule {
  friend bool operator==(const ForwardRule&, const ForwardRule&) = default;
};

// Each initial point carries a designated facing; dancers start in the facing
// of their own point and must end matching the point they stop on.
struct MatchingRule {
  FacingAssignment facings;

  friend bool operator==(const MatchingRule&, const MatchingRule&) = default;
};

using DanceRule = std::variant<ForwardRule, MatchingRule>;

// A diagram together with n initial points, the number k of paths each
// dancer traverses, and the facing and crossing rules.
class DancePlan {
public:
  // Throws DiagramError for a bad placement and std::invalid_argument for
  // k = 0 or a facing list whose length is not n.
  DancePlan(Diagram diagram, GapSet points, std::size_t laps, DanceRule rule = ForwardRule{},
            CrossingRule crossing_rule = CrossingRule::OverFirst);

  const Diagram& diagram() const noexcept { return diagram_; }
  const GapSet& points() const noexcept { return points_; }
  std::size_t dancers() const noexcept { return points_.size(); }
  std::size_t laps() const noexcept { return laps_; }
  const DanceRule& rule() const noexcept { return rule_; }
  CrossingRule crossing_rule() const noexcept { return crossing_rule_; }
  bool is_matching() const noexcept { return std::holds_alternative<MatchingRule>(rule_); }

  // Facing dancer i starts in.
  Facing start_facing(std::size_t dancer) const;

  friend bool operator==(const DancePlan&, const DancePlan&) = default;

private:
  Diagram diagram_;
  GapSet points_;
  std::size_t laps_;
  DanceRule rule_;
  CrossingRule crossing_rule_;
};

using Route = std::vector<std::size_t>;

// Route i is paths i, i+1, ..., i+k-1 (mod n) concatenated, as event indices.
std::vector<Route> routes_of(const DancePlan& plan);

struct Step {
  std::size_t dancer = 0;
  std::size_t route_position = 0;
  std::size_t event_index = 0;
  Facing facing = Facing::Forward;  // after the step

  friend bool operator==(const Step&, const Step&) = default;
};

struct Schedule {
  std::vector<Step> steps;
  bool feasible = true;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class InfeasibleReason : std::uint8_t { FacingParity, Deadlock };

const char* to_string(InfeasibleReason reason);

struct Infeasible {
  InfeasibleReason reason = InfeasibleReason::Deadlock;
  std::uint64_t states_explored = 0;
};

using SearchOutcome = std::variant<Schedule, Infeasible>;

inline bool is_feasible(const SearchOutcome& o) { return std::holds_alternative<Schedule>(o); }

// True when the plan's facing constraints hold (forward or matching parity).
bool facing_constraints_ok(const DancePlan& plan);

// Memoized depth-first search over per-dancer progress vectors. Dancers are
// tried in id order, so the witness is the lexicographically first feasible
// interleaving.
SearchOutcome schedule_search(const DancePlan& plan);

class InstanceTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxSteps = 16;

// Brute-force reference: enumerates interleavings of the routes in
// lexicographic dancer order and checks the crossing rule on every prefix and
// the facing rule by stepping facings through the routes. Shares no code with
// schedule_search or the facing algebra. Throws InstanceTooLarge when
// k * m > kOracleMaxSteps.
SearchOutcome oracle_schedule(const DancePlan& plan);

// Independent check of every Schedule invariant for the plan. Returns a
// description of the first violation, or nullopt for a valid witness.
std::optional<std::string> verify_schedule(const DancePlan& plan, const Schedule& schedule);

// Reverses orientation. Gap g maps to gap (m - g) mod m.
Diagram retrograde(const Diagram& diagram);
GapSet retrograde_points(const Diagram& diagram, const GapSet& points);

// The time-reversed plan: reversed diagram, mapped points, the mirrored
// crossing rule, and for matching plans each point keeps its facing.
DancePlan retrograde(const DancePlan& plan);

}  // namespace tvdance

#endif  // TVDANCE_SCHEDULER_HPP

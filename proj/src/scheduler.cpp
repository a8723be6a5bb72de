#include "tvdance/scheduler.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace tvdance {

const char* to_string(CrossingRule rule) {
  switch (rule) {
    case CrossingRule::OverFirst: return "over-first";
    case CrossingRule::UnderFirst: return "under-first";
    case CrossingRule::Unrestricted: return "unrestricted";
  }
  return "?";
}

const char* to_string(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::FacingParity: return "FacingParity";
    case InfeasibleReason::Deadlock: return "Deadlock";
  }
  return "?";
}

DancePlan::DancePlan(Diagram diagram, GapSet points, std::size_t laps, DanceRule rule,
                     CrossingRule crossing_rule)
    : diagram_(std::move(diagram)),
      points_(std::move(points)),
      laps_(laps),
      rule_(std::move(rule)),
      crossing_rule_(crossing_rule) {
  check_placement(diagram_, points_);
  if (laps_ == 0) throw std::invalid_argument("lap count k must be at least 1");
  if (const auto* m = std::get_if<MatchingRule>(&rule_); m && m->facings.size() != points_.size()) {
    throw std::invalid_argument("matching rule needs one facing per initial point (" +
                                std::to_string(points_.size()) + "), got " +
                                std::to_string(m->facings.size()));
  }
}

Facing DancePlan::start_facing(std::size_t dancer) const {
  if (const auto* m = std::get_if<MatchingRule>(&rule_)) return m->facings.at(dancer);
  return Facing::Forward;
}

std::vector<Route> routes_of(const DancePlan& plan) {
  const auto paths = paths_of(plan.diagram(), plan.points());
  const std::size_t n = paths.size();
  std::vector<Route> routes(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < plan.laps(); ++j) {
      const auto& p = paths[(i + j) % n].events;
      routes[i].insert(routes[i].end(), p.begin(), p.end());
    }
  }
  return routes;
}

bool facing_constraints_ok(const DancePlan& plan) {
  const ParityVector t = parity_vector(plan.diagram(), plan.points());
  if (const auto* m = std::get_if<MatchingRule>(&plan.rule())) {
    return matching_check(t, m->facings, plan.laps());
  }
  return forward_rule_ok(t, plan.laps());
}

namespace {

std::vector<Step> replay(const DancePlan& plan, const std::vector<Route>& routes,
                         const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pos(routes.size(), 0);
  std::vector<Facing> facing(routes.size());
  for (std::size_t d = 0; d < routes.size(); ++d) facing[d] = plan.start_facing(d);
  std::vector<Step> steps;
  steps.reserve(order.size());
  for (std::size_t d : order) {
    const std::size_t e = routes[d][pos[d]];
    if (is_twist_bar(plan.diagram()[e])) facing[d] = flip(facing[d]);
    steps.push_back(Step{d, pos[d], e, facing[d]});
    ++pos[d];
  }
  return steps;
}

// Classical passes resolved to dense crossing slots.
struct PassInfo {
  std::int32_t slot = -1;  // -1: never blocks
  bool over = false;
};

}  // namespace

SearchOutcome schedule_search(const DancePlan& plan) {
  const auto routes = routes_of(plan);
  if (!facing_constraints_ok(plan)) return Infeasible{InfeasibleReason::FacingParity, 0};

  const Diagram& diagram = plan.diagram();
  const std::size_t n = routes.size();
  const CrossingRule rule = plan.crossing_rule();

  std::unordered_map<CrossingId, std::int32_t> slots;
  std::vector<PassInfo> info(diagram.size());
  for (std::size_t e = 0; e < diagram.size(); ++e) {
    if (const auto* c = std::get_if<ClassicalPass>(&diagram[e])) {
      auto [it, fresh] = slots.try_emplace(c->crossing, static_cast<std::int32_t>(slots.size()));
      info[e] = PassInfo{it->second, c->strand == Strand::Over};
    }
  }

  std::size_t total = 0;
  for (const auto& r : routes) total += r.size();

  // Crossing counters follow from the progress vector, so the visited set is
  // keyed on positions only; the counters are maintained incrementally.
  std::vector<std::uint32_t> over(slots.size(), 0), under(slots.size(), 0);
  std::vector<std::size_t> pos(n, 0);

  auto enabled = [&](std::size_t d) {
    if (pos[d] >= routes[d].size()) return false;
    const PassInfo& p = info[routes[d][pos[d]]];
    if (p.slot < 0) return true;
    switch (rule) {
      case CrossingRule::OverFirst: return p.over || over[p.slot] > under[p.slot];
      case CrossingRule::UnderFirst: return !p.over || under[p.slot] > over[p.slot];
      case CrossingRule::Unrestricted: return true;
    }
    return true;
  };
  auto step = [&](std::size_t d) {
    const PassInfo& p = info[routes[d][pos[d]]];
    if (p.slot >= 0) ++(p.over ? over : under)[p.slot];
    ++pos[d];
  };
  auto unstep = [&](std::size_t d) {
    --pos[d];
    const PassInfo& p = info[routes[d][pos[d]]];
    if (p.slot >= 0) --(p.over ? over : under)[p.slot];
  };
  auto key = [&] {
    std::string k(n * sizeof(std::uint32_t), '\0');
    for (std::size_t d = 0; d < n; ++d) {
      const auto v = static_cast<std::uint32_t>(pos[d]);
      std::copy_n(reinterpret_cast<const char*>(&v), sizeof v, k.data() + d * sizeof v);
    }
    return k;
  };

  std::unordered_set<std::string> visited;
  visited.insert(key());
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> next_try{0};
  chosen.reserve(total);

  while (chosen.size() < total) {
    std::size_t& from = next_try.back();
    std::size_t d = from;
    while (d < n && !enabled(d)) ++d;
    if (d < n) {
      from = d + 1;
      step(d);
      if (!visited.insert(key()).second) {
        unstep(d);
        continue;
      }
      chosen.push_back(d);
      next_try.push_back(0);
      continue;
    }
    next_try.pop_back();
    if (chosen.empty()) return Infeasible{InfeasibleReason::Deadlock, visited.size()};
    unstep(chosen.back());
    chosen.pop_back();
  }

  return Schedule{replay(plan, routes, chosen), true};
}

namespace {

// Plain recursive enumeration of merge orders, no memoization.
class OracleEnumerator {
public:
  OracleEnumerator(const DancePlan& plan, const std::vector<Route>& routes)
      : plan_(plan), routes_(routes), pos_(routes.size(), 0) {
    for (const auto& r : routes) total_ += r.size();
  }

  bool run() { return extend(); }
  const std::vector<std::size_t>& order() const { return order_; }

private:
  bool prefix_ok(const ClassicalPass& c) const {
    auto it = counts_.find(c.crossing);
    const int o = it == counts_.end() ? 0 : it->second.first;
    const int u = it == counts_.end() ? 0 : it->second.second;
    switch (plan_.crossing_rule()) {
      case CrossingRule::OverFirst: return u <= o;
      case CrossingRule::UnderFirst: return o <= u;
      case CrossingRule::Unrestricted: return true;
    }
    return true;
  }

  bool extend() {
    if (order_.size() == total_) return true;
    for (std::size_t d = 0; d < routes_.size(); ++d) {
      if (pos_[d] == routes_[d].size()) continue;
      const Event& e = plan_.diagram()[routes_[d][pos_[d]]];
      const auto* c = std::get_if<ClassicalPass>(&e);
      if (c) {
        auto& cnt = counts_[c->crossing];
        (c->strand == Strand::Over ? cnt.first : cnt.second) += 1;
      }
      const bool ok = !c || prefix_ok(*c);
      ++pos_[d];
      order_.push_back(d);
      if (ok && extend()) return true;
      order_.pop_back();
      --pos_[d];
      if (c) {
        auto& cnt = counts_[c->crossing];
        (c->strand == Strand::Over ? cnt.first : cnt.second) -= 1;
      }
    }
    return false;
  }

  const DancePlan& plan_;
  const std::vector<Route>& routes_;
  std::vector<std::size_t> pos_;
  std::size_t total_ = 0;
  std::vector<std::size_t> order_;
  std::map<CrossingId, std::pair<int, int>> counts_;
};

}  // namespace

SearchOutcome oracle_schedule(const DancePlan& plan) {
  if (plan.laps() * plan.diagram().size() > kOracleMaxSteps) {
    throw InstanceTooLarge("oracle limited to k*m <= " + std::to_string(kOracleMaxSteps) + " steps");
  }
  const auto routes = routes_of(plan);
  const std::size_t n = routes.size();

  // Facing rule, by walking each route.
  for (std::size_t d = 0; d < n; ++d) {
    Facing f = plan.start_facing(d);
    for (std::size_t e : routes[d]) {
      if (is_twist_bar(plan.diagram()[e])) f = flip(f);
    }
    const Facing want =
        plan.is_matching() ? plan.start_facing((d + plan.laps()) % n) : Facing::Forward;
    if (f != want) return Infeasible{InfeasibleReason::FacingParity, 0};
  }

  OracleEnumerator en(plan, routes);
  if (!en.run()) return Infeasible{InfeasibleReason::Deadlock, 0};
  return Schedule{replay(plan, routes, en.order()), true};
}

std::optional<std::string> verify_schedule(const DancePlan& plan, const Schedule& schedule) {
  if (!schedule.feasible) return "schedule is not flagged feasible";
  const auto routes = routes_of(plan);
  const std::size_t n = routes.size();
  const Diagram& diagram = plan.diagram();

  std::vector<std::size_t> done(n, 0);
  std::vector<Facing> facing(n);
  for (std::size_t d = 0; d < n; ++d) facing[d] = plan.start_facing(d);
  std::map<CrossingId, std::pair<std::size_t, std::size_t>> passes;  // over, under

  for (std::size_t t = 0; t < schedule.steps.size(); ++t) {
    const Step& s = schedule.steps[t];
    const std::string at = "step " + std::to_string(t) + ": ";
    if (s.dancer >= n) return at + "unknown dancer " + std::to_string(s.dancer);
    if (done[s.dancer] >= routes[s.dancer].size()) return at + "dancer has already finished its route";
    if (s.route_position != done[s.dancer]) return at + "route position out of order";
    if (s.event_index != routes[s.dancer][done[s.dancer]]) return at + "event is not next on the route";
    ++done[s.dancer];

    const Event& e = diagram[s.event_index];
    if (is_twist_bar(e)) facing[s.dancer] = flip(facing[s.dancer]);
    if (s.facing != facing[s.dancer]) return at + "facing does not follow the twist bars";

    if (const auto* c = std::get_if<ClassicalPass>(&e)) {
      auto& [o, u] = passes[c->crossing];
      (c->strand == Strand::Over ? o : u) += 1;
      if (plan.crossing_rule() == CrossingRule::OverFirst && u > o) {
        return at + "under pass of crossing " + std::to_string(c->crossing) + " before its over pass";
      }
      if (plan.crossing_rule() == CrossingRule::UnderFirst && o > u) {
        return at + "over pass of crossing " + std::to_string(c->crossing) + " before its under pass";
      }
    }
  }

  for (std::size_t d = 0; d < n; ++d) {
    if (done[d] != routes[d].size()) return "dancer " + std::to_string(d) + " did not finish its route";
    const Facing want =
        plan.is_matching() ? plan.start_facing((d + plan.laps()) % n) : Facing::Forward;
    if (facing[d] != want) return "dancer " + std::to_string(d) + " ends with the wrong facing";
  }
  return std::nullopt;
}

Diagram retrograde(const Diagram& diagram) {
  std::vector<Event> events(diagram.events().rbegin(), diagram.events().rend());
  return Diagram::validate(std::move(events));
}

GapSet retrograde_points(const Diagram& diagram, const GapSet& points) {
  const std::size_t m = diagram.size();
  GapSet out;
  out.reserve(points.size());
  for (std::size_t g : points) out.push_back(m == 0 ? 0 : (m - g) % m);
  std::sort(out.begin(), out.end());
  return out;
}

DancePlan retrograde(const DancePlan& plan) {
  const std::size_t m = plan.diagram().size();
  std::vector<std::pair<std::size_t, Facing>> mapped;
  for (std::size_t i = 0; i < plan.dancers(); ++i) {
    mapped.emplace_back(m == 0 ? 0 : (m - plan.points()[i]) % m, plan.start_facing(i));
  }
  std::sort(mapped.begin(), mapped.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  GapSet points;
  FacingAssignment facings;
  for (const auto& [g, f] : mapped) {
    points.push_back(g);
    facings.push_back(f);
  }
  DanceRule rule = ForwardRule{};
  if (plan.is_matching()) rule = MatchingRule{std::move(facings)};
  CrossingRule crossing = plan.crossing_rule();
  if (crossing == CrossingRule::OverFirst) crossing = CrossingRule::UnderFirst;
  else if (crossing == CrossingRule::UnderFirst) crossing = CrossingRule::OverFirst;
  return DancePlan(retrograde(plan.diagram()), std::move(points), plan.laps(), std::move(rule), crossing);
}

}  // namespace tvdance

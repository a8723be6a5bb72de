#include "tvdance/model.hpp"

#include <algorithm>
#include <unordered_map>

namespace tvdance {

const char* to_string(DiagramErrorKind kind) {
  switch (kind) {
    case DiagramErrorKind::DuplicateStrand: return "DuplicateStrand";
    case DiagramErrorKind::UnpairedCrossing: return "UnpairedCrossing";
    case DiagramErrorKind::SignMismatch: return "SignMismatch";
    case DiagramErrorKind::DuplicateBar: return "DuplicateBar";
    case DiagramErrorKind::DuplicateGap: return "DuplicateGap";
    case DiagramErrorKind::InvalidPlacement: return "InvalidPlacement";
  }
  return "?";
}

DiagramError::DiagramError(DiagramErrorKind kind, std::vector<std::size_t> positions,
                           const std::string& what)
    : std::runtime_error(what), kind_(kind), positions_(std::move(positions)) {}

namespace {

struct CrossingUse {
  std::vector<std::size_t> over;
  std::vector<std::size_t> under;
  std::vector<std::size_t> virt;

  std::size_t total() const { return over.size() + under.size() + virt.size(); }
  std::vector<std::size_t> all() const {
    std::vector<std::size_t> out;
    out.insert(out.end(), over.begin(), over.end());
    out.insert(out.end(), under.begin(), under.end());
    out.insert(out.end(), virt.begin(), virt.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

Diagram Diagram::validate(std::vector<Event> events) {
  // Crossing ids in order of first appearance, so reported errors follow the
  // reading order of the code.
  std::vector<CrossingId> order;
  std::unordered_map<CrossingId, CrossingUse> uses;
  std::vector<BarId> bar_order;
  std::unordered_map<BarId, std::vector<std::size_t>> bars;

  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    if (const auto* c = std::get_if<ClassicalPass>(&e)) {
      auto [it, fresh] = uses.try_emplace(c->crossing);
      if (fresh) order.push_back(c->crossing);
      (c->strand == Strand::Over ? it->second.over : it->second.under).push_back(i);
    } else if (const auto* v = std::get_if<VirtualPass>(&e)) {
      auto [it, fresh] = uses.try_emplace(v->crossing);
      if (fresh) order.push_back(v->crossing);
      it->second.virt.push_back(i);
    } else {
      const auto& t = std::get<TwistBar>(e);
      auto [it, fresh] = bars.try_emplace(t.bar);
      if (fresh) bar_order.push_back(t.bar);
      it->second.push_back(i);
    }
  }

  // Strand duplication: report the earliest event that repeats a strand.
  {
    std::size_t first_bad = events.size();
    CrossingId bad_id = 0;
    std::vector<std::size_t> bad_positions;
    for (CrossingId id : order) {
      const CrossingUse& u = uses.at(id);
      for (const auto* strand : {&u.over, &u.under}) {
        if (strand->size() >= 2 && (*strand)[1] < first_bad) {
          first_bad = (*strand)[1];
          bad_id = id;
          bad_positions = *strand;
        }
      }
    }
    if (first_bad < events.size()) {
      throw DiagramError(DiagramErrorKind::DuplicateStrand, bad_positions,
                         "crossing " + std::to_string(bad_id) + " passes the same strand twice");
    }
  }

  for (CrossingId id : order) {
    const CrossingUse& u = uses.at(id);
    const bool classical_pair = u.over.size() == 1 && u.under.size() == 1 && u.virt.empty();
    const bool virtual_pair = u.virt.size() == 2 && u.over.empty() && u.under.empty();
    if (!classical_pair && !virtual_pair) {
      throw DiagramError(DiagramErrorKind::UnpairedCrossing, u.all(),
                         "crossing " + std::to_string(id) + " appears " + std::to_string(u.total()) +
                             " time(s); expected one over and one under pass, or two virtual passes");
    }
  }

  for (CrossingId id : order) {
    const CrossingUse& u = uses.at(id);
    if (u.over.empty()) continue;
    const auto& over = std::get<ClassicalPass>(events[u.over[0]]);
    const auto& under = std::get<ClassicalPass>(events[u.under[0]]);
    if (over.sign != under.sign) {
      throw DiagramError(DiagramErrorKind::SignMismatch, u.all(),
                         "crossing " + std::to_string(id) + " has passes with different signs");
    }
  }

  for (BarId id : bar_order) {
    const auto& at = bars.at(id);
    if (at.size() > 1) {
      throw DiagramError(DiagramErrorKind::DuplicateBar, at,
                         "twist bar " + std::to_string(id) + " appears more than once");
    }
  }

  return Diagram(std::move(events));
}

void check_placement(const Diagram& diagram, const GapSet& points) {
  const std::size_t gaps = diagram.gap_count();
  if (points.empty()) {
    throw DiagramError(DiagramErrorKind::InvalidPlacement, {}, "at least one initial point is required");
  }
  for (std::size_t g : points) {
    if (g >= gaps) {
      throw DiagramError(DiagramErrorKind::InvalidPlacement, {g},
                         "gap " + std::to_string(g) + " is out of range (diagram has " +
                             std::to_string(gaps) + " gaps)");
    }
  }
  GapSet sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw DiagramError(DiagramErrorKind::DuplicateGap, {*dup},
                       "two initial points share gap " + std::to_string(*dup));
  }
  // Cyclic order: at most one descent, and none across the wrap when present.
  std::size_t descents = 0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] < points[i]) ++descents;
  }
  if (descents > 1 || (descents == 1 && points.back() >= points.front())) {
    throw DiagramError(DiagramErrorKind::InvalidPlacement, points,
                       "initial points are not listed in cyclic order");
  }
}

std::vector<Path> paths_of(const Diagram& diagram, const GapSet& points) {
  check_placement(diagram, points);
  const std::size_t m = diagram.size();
  const std::size_t n = points.size();
  std::vector<Path> paths(n);
  for (std::size_t i = 0; i < n; ++i) {
    paths[i].start_gap = points[i];
    if (m == 0) continue;
    const std::size_t end = points[(i + 1) % n];
    std::size_t len = (end + m - points[i]) % m;
    if (n == 1) len = m;
    paths[i].events.reserve(len);
    for (std::size_t j = 0; j < len; ++j) paths[i].events.push_back((points[i] + j) % m);
  }
  return paths;
}

}  // namespace tvdance

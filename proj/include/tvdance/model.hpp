#ifndef TVDANCE_MODEL_HPP
#define TVDANCE_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tvdance {

using CrossingId = std::uint32_t;
using BarId = std::uint32_t;

enum class CrossingSign : std::uint8_t { Positive, Negative };
enum class Strand : std::uint8_t { Over, Under };

// A pass through a classical crossing. The sign is kept for fidelity only;
// no dance rule reads it.
struct ClassicalPass {
  CrossingId crossing = 0;
  Strand strand = Strand::Over;
  CrossingSign sign = CrossingSign::Positive;

  friend bool operator==(const ClassicalPass&, const ClassicalPass&) = default;
};

struct VirtualPass {
  CrossingId crossing = 0;

  friend bool operator==(const VirtualPass&, const VirtualPass&) = default;
};

// Passage through a cross-cap. Flips the facing of whoever crosses it.
struct TwistBar {
  BarId bar = 0;

  friend bool operator==(const TwistBar&, const TwistBar&) = default;
};

using Event = std::variant<ClassicalPass, VirtualPass, TwistBar>;

inline bool is_twist_bar(const Event& e) { return std::holds_alternative<TwistBar>(e); }

enum class DiagramErrorKind {
  DuplicateStrand,
  UnpairedCrossing,
  SignMismatch,
  DuplicateBar,
  DuplicateGap,
  InvalidPlacement,
};

const char* to_string(DiagramErrorKind kind);

// Structural violation. `events()` lists the offending event indices (or gap
// indices for placement errors) so callers can point back into their input.
class DiagramError : public std::runtime_error {
public:
  DiagramError(DiagramErrorKind kind, std::vector<std::size_t> positions, const std::string& what);

  DiagramErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& positions() const noexcept { return positions_; }

private:
  DiagramErrorKind kind_;
  std::vector<std::size_t> positions_;
};

// Validated cyclic sequence of events. The successor of the last event is the
// first; orientation is index order. Immutable after construction.
class Diagram {
public:
  Diagram() = default;

  // Checks, in order: strand duplication, pairing, sign agreement, bar
  // uniqueness. Throws DiagramError for the first violated class.
  static Diagram validate(std::vector<Event> events);

  const std::vector<Event>& events() const noexcept { return events_; }
  const Event& operator[](std::size_t i) const { return events_[i]; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  // Gap g sits immediately before event g; the empty diagram has one gap.
  std::size_t gap_count() const noexcept { return events_.empty() ? 1 : events_.size(); }

  friend bool operator==(const Diagram&, const Diagram&) = default;

private:
  explicit Diagram(std::vector<Event> events) : events_(std::move(events)) {}

  std::vector<Event> events_;
};

// Initial points, one gap index per dancer, in cyclic order.
using GapSet = std::vector<std::size_t>;

struct Path {
  std::size_t start_gap = 0;
  std::vector<std::size_t> events;  // event indices, in orientation order
};

// Throws DiagramError(DuplicateGap) for coincident points and
// DiagramError(InvalidPlacement) for empty, out-of-range or out-of-order
// points.
void check_placement(const Diagram& diagram, const GapSet& points);

std::vector<Path> paths_of(const Diagram& diagram, const GapSet& points);

}  // namespace tvdance

#endif  // TVDANCE_MODEL_HPP

#include "tvdance/facing.hpp"

#include <stdexcept>

namespace tvdance {

bool ParityVector::total() const noexcept {
  bool acc = false;
  for (auto b : bits) acc ^= (b != 0);
  return acc;
}

ParityVector parity_vector(const Diagram& diagram, const GapSet& points) {
  const auto paths = paths_of(diagram, points);
  ParityVector t;
  t.bits.reserve(paths.size());
  for (const auto& path : paths) {
    std::uint8_t bit = 0;
    for (std::size_t e : path.events) {
      if (is_twist_bar(diagram[e])) bit ^= 1;
    }
    t.bits.push_back(bit);
  }
  return t;
}

bool window_parity(const ParityVector& t, std::size_t start, std::size_t laps) {
  const std::size_t n = t.size();
  if (n == 0) throw std::invalid_argument("window_parity: empty parity vector");
  // Whole trips around the vector contribute the total parity each.
  bool acc = ((laps / n) % 2 == 1) && t.total();
  for (std::size_t j = 0; j < laps % n; ++j) acc ^= t[(start + j) % n];
  return acc;
}

bool forward_rule_ok(const ParityVector& t, std::size_t laps) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (window_parity(t, i, laps)) return false;
  }
  return true;
}

bool matching_check(const ParityVector& t, const FacingAssignment& f, std::size_t laps) {
  const std::size_t n = t.size();
  if (f.size() != n) throw std::invalid_argument("matching_check: facing count differs from point count");
  for (std::size_t i = 0; i < n; ++i) {
    if (apply_parity(f[i], window_parity(t, i, laps)) != f[(i + laps) % n]) return false;
  }
  return true;
}

std::optional<FacingAssignment> matching_solve(const ParityVector& t, std::size_t laps) {
  const std::size_t n = t.size();
  if (n == 0) throw std::invalid_argument("matching_solve: empty parity vector");
  FacingAssignment f(n, Facing::Forward);
  std::vector<bool> assigned(n, false);
  // Each orbit of i -> i+k is a cycle of constraints f[i+k] = f[i] ^ w(i).
  // Its smallest index is free; setting it Forward gives the least solution.
  for (std::size_t root = 0; root < n; ++root) {
    if (assigned[root]) continue;
    assigned[root] = true;
    f[root] = Facing::Forward;
    std::size_t i = root;
    while (true) {
      const std::size_t next = (i + laps) % n;
      const Facing want = apply_parity(f[i], window_parity(t, i, laps));
      if (next == root) {
        if (want != f[root]) return std::nullopt;
        break;
      }
      f[next] = want;
      assigned[next] = true;
      i = next;
    }
  }
  return f;
}

}  // namespace tvdance

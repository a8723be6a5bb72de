#ifndef TVDANCE_FACING_HPP
#define TVDANCE_FACING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tvdance/model.hpp"

namespace tvdance {

// Facings are bits over GF(2): Forward = 0, Backward = 1.
enum class Facing : std::uint8_t { Forward = 0, Backward = 1 };

constexpr Facing flip(Facing f) noexcept {
  return f == Facing::Forward ? Facing::Backward : Facing::Forward;
}

constexpr Facing apply_parity(Facing f, bool parity) noexcept { return parity ? flip(f) : f; }

constexpr char facing_letter(Facing f) noexcept { return f == Facing::Forward ? 'F' : 'B'; }

using FacingAssignment = std::vector<Facing>;

// bits[i] is the number of twist bars on path i, mod 2.
struct ParityVector {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  bool operator[](std::size_t i) const { return bits[i] != 0; }
  bool total() const noexcept;

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

ParityVector parity_vector(const Diagram& diagram, const GapSet& points);

// XOR of bits[i], bits[i+1], ..., bits[i+k-1], indices mod n. This is the
// net facing change of the dancer that starts on point i and dances k paths.
bool window_parity(const ParityVector& t, std::size_t start, std::size_t laps);

bool forward_rule_ok(const ParityVector& t, std::size_t laps);

// Endpoint-only check: every dancer's final facing must equal the designated
// facing of the point it ends on, (i + k) mod n.
bool matching_check(const ParityVector& t, const FacingAssignment& f, std::size_t laps);

// Lexicographically least assignment (Forward < Backward) satisfying
// matching_check, or nullopt when the system has no solution.
std::optional<FacingAssignment> matching_solve(const ParityVector& t, std::size_t laps);

}  // namespace tvdance

#endif  // TVDANCE_FACING_HPP

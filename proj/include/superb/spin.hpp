#pragma once

#include <stdexcept>
#include <string>

namespace superb {

/// Label of an SU(2) irrep block. Half-integers are stored as doubled
/// integers (two_j = 2j), so j = 1/2 is two_j = 1 and parity bookkeeping
/// stays exact.
struct SpinLabel {
  int two_j = 0;

  SpinLabel() = default;
  explicit SpinLabel(int two_j_) : two_j(two_j_) {
    if (two_j < 0) throw std::invalid_argument("SpinLabel: 2j must be >= 0");
  }

  static SpinLabel from_doubled(int two_j_) { return SpinLabel(two_j_); }

  int dim() const { return two_j + 1; }
  double value() const { return 0.5 * two_j; }
  bool is_integer() const { return two_j % 2 == 0; }

  bool operator==(const SpinLabel&) const = default;
};

/// Smallest spin in the ladder j0, j0+1, ..., n/2 for n coupled qubits.
inline int lowest_two_j(int n_qubits) { return n_qubits % 2; }

/// True when two_m is an admissible magnetic number for two_j.
inline bool magnetic_in_range(int two_j, int two_m) {
  return (two_j - two_m) % 2 == 0 && two_m >= -two_j && two_m <= two_j;
}

inline std::string spin_to_string(int two_j) {
  if (two_j % 2 == 0) return std::to_string(two_j / 2);
  return std::to_string(two_j) + "/2";
}

}  // namespace superb

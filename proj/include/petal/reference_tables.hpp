#pragma once

#include <span>

#include "petal/topology.hpp"

namespace petal {

/// One published SLEM value for a PathBundle petal of order (n, m, k).
struct ReferenceCell {
  CoreKind core = CoreKind::SingleHub;
  int n = 2;
  int m = 2;
  int k = 1;
  double slem = 0.0;  // printed to 5 decimals

  PetalSpec spec() const { return {core, n, PathBundle{m, k}}; }
};

/// Published values for hub petals, in print order.
std::span<const ReferenceCell> hub_table();
/// Published values for complete-core petals, in print order.
std::span<const ReferenceCell> core_table();

/// Tolerance for comparing against 5-decimal printed values.
inline constexpr double kTableTolerance = 5e-5;

}  // namespace petal

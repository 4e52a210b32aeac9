#pragma once

// Brute-force search for closed change-h Hamiltonian cycles at small k.
// Shares nothing with the constructor beyond the hypercube primitives.

#include <cstdint>
#include <optional>

#include "leapcycles/hypercube.hpp"
#include "leapcycles/path.hpp"

namespace leapcycles {

inline constexpr unsigned kOracleMaxDim = 12;
inline constexpr unsigned kCountMaxDim = 5;

enum class NeighborOrder { Ascending, Descending };

struct OracleOptions {
  /// Worker threads for the top-level branch split. 0 means 1. Results do
  /// not depend on this value.
  unsigned threads = 1;
  /// Ascending is canonical; Descending exists to cross-check counts.
  NeighborOrder order = NeighborOrder::Ascending;
};

struct OracleResult {
  bool exists = false;
  std::optional<std::uint64_t> count;
  std::uint64_t nodes_explored = 0;
  std::optional<VertexPath> witness;
};

/// Depth-first search anchored at the origin. The witness, when requested,
/// is the first cycle in canonical branch order. k = 1 never has a cycle.
/// Throws CapacityError when k > kOracleMaxDim.
[[nodiscard]] OracleResult oracle_exists(Dimension k, StepClass h, bool want_witness,
                                         const OracleOptions& options = {});

/// Counts undirected cycles: start fixed at the origin, second vertex
/// numerically below the last. Throws CapacityError when k > kCountMaxDim.
[[nodiscard]] OracleResult oracle_count(Dimension k, StepClass h, const OracleOptions& options = {});

}  // namespace leapcycles

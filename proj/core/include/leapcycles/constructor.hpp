#pragma once

#include <string>
#include <variant>

#include "leapcycles/hypercube.hpp"
#include "leapcycles/path.hpp"

namespace leapcycles {

enum class Feasibility { Feasible, InfeasibleParity, InfeasibleRange, InfeasibleDimension };

const char* to_string(Feasibility f) noexcept;

struct FeasibilityVerdict {
  Feasibility status;
  std::string detail;

  [[nodiscard]] bool feasible() const noexcept { return status == Feasibility::Feasible; }
};

/// A closed change-h Hamiltonian cycle of {0,1}^k. Only the constructor
/// functions below produce certificates with verified = true.
struct CycleCertificate {
  Dimension dim;
  StepClass step;
  VertexPath path;
  bool verified = false;
};

/// Total decision for (k, h):
///   k < 2                 InfeasibleDimension
///   h >= k                InfeasibleRange  (at most one move is possible)
///   h even                InfeasibleParity (moves never leave the start's parity class)
///   otherwise             Feasible
[[nodiscard]] FeasibilityVerdict feasibility(Dimension k, StepClass h);

/// Smallest cycle for odd h: the Gray square for h = 1, otherwise the Gray
/// tour of dimension h + 1 with every odd-index vertex complemented.
/// Throws RangeError for even h.
[[nodiscard]] CycleCertificate base_cycle(StepClass h, unsigned max_dim = kDefaultMaxDim);

/// Raises a verified change-h cycle from dimension k to k + 1. The input must
/// satisfy k >= h + 1 (InvalidInput otherwise).
[[nodiscard]] CycleCertificate lift(const CycleCertificate& cycle, unsigned max_dim = kDefaultMaxDim);

using ConstructResult = std::variant<CycleCertificate, FeasibilityVerdict>;

/// Builds a verified cycle whenever feasibility(k, h) is Feasible, otherwise
/// returns the verdict. Only CapacityError escapes.
[[nodiscard]] ConstructResult construct(Dimension k, StepClass h, unsigned max_dim = kDefaultMaxDim);

}  // namespace leapcycles

#pragma once

#include "leapcycles/hypercube.hpp"
#include "leapcycles/path.hpp"

namespace leapcycles {

/// Closed change-1 tour of {0,1}^k (reflected binary code) starting at the
/// origin. Index j holds j ^ (j >> 1). Throws CapacityError above max_dim.
[[nodiscard]] VertexPath gray_tour(Dimension k, unsigned max_dim = kDefaultMaxDim);

/// One reflection round: append a 0 coordinate to every vertex, append a 1
/// coordinate to a reversed copy, and concatenate. The input must be a closed
/// change-1 tour covering its whole dimension (InvalidInput otherwise).
[[nodiscard]] VertexPath reflect_extend(const VertexPath& tour,
                                        unsigned max_dim = kDefaultMaxDim);

}  // namespace leapcycles

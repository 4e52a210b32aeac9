#pragma once

// Mechanical path rewrites used by the cycle construction. None of these
// check Hamiltonicity or step class; that is the verifier's job.

#include "leapcycles/hypercube.hpp"
#include "leapcycles/path.hpp"

namespace leapcycles {

/// Replaces every vertex at an odd index by its complement.
[[nodiscard]] VertexPath complement_odd_indices(const VertexPath& path);

/// Adds coordinate k+1 (bit position k) with the given value to every vertex.
[[nodiscard]] VertexPath append_coordinate(const VertexPath& path, bool bit,
                                           unsigned max_dim = kDefaultMaxDim);

/// Flips the leftmost m coordinates of every vertex. RangeError if m > k.
[[nodiscard]] VertexPath flip_prefix_path(const VertexPath& path, unsigned m);

[[nodiscard]] VertexPath reverse_path(const VertexPath& path);

}  // namespace leapcycles

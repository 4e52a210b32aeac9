#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leapcycles/hypercube.hpp"
#include "leapcycles/path.hpp"

namespace leapcycles {

enum class ViolationKind { WrongLength, DuplicateVertex, WrongStep, OpenEndpoints, DimensionOverflow };

const char* to_string(ViolationKind kind) noexcept;

/// Location semantics per kind:
///   WrongLength        index = actual length
///   DuplicateVertex    index = repeated position, other = first occurrence
///   WrongStep          index -> other = index + 1, actual = observed distance
///   OpenEndpoints      index = last position, other = 0, actual = observed distance
///   DimensionOverflow  index = offending position
struct Violation {
  ViolationKind kind;
  std::size_t index = 0;
  std::optional<std::size_t> other;
  std::optional<unsigned> actual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& v);

struct VerifyReport {
  bool valid = false;
  std::vector<Violation> violations;

  [[nodiscard]] std::size_t count(ViolationKind kind) const;
};

/// Checks that words form a closed change-h Hamiltonian cycle of {0,1}^k.
/// All violations are collected, not just the first.
[[nodiscard]] VerifyReport verify_cycle(Dimension k, std::span<const Word> words, StepClass h);
[[nodiscard]] VerifyReport verify_cycle(const VertexPath& path, StepClass h);

}  // namespace leapcycles

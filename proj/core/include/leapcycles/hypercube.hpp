#pragma once

// Bit-level model of the hypercube vertex set {0,1}^k.
//
// Coordinate convention: a tuple (x_1, ..., x_k) written leftmost-first is
// stored with x_1 in bit 0, x_2 in bit 1, and so on. Every serializer and
// parser in the project uses this convention.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leapcycles {

using Word = std::uint32_t;

/// Widest dimension a Word can hold. Never configurable.
inline constexpr unsigned kWordBits = 32;

/// Default cap on the dimension of anything that materializes 2^k vertices.
inline constexpr unsigned kDefaultMaxDim = 28;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A requested dimension exceeds the configured or hard capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition on an input object does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Number of coordinates k, 1 <= k <= kWordBits.
class Dimension {
 public:
  explicit Dimension(unsigned k);

  [[nodiscard]] unsigned value() const noexcept { return k_; }
  /// All-ones word over the k coordinate bits.
  [[nodiscard]] Word mask() const noexcept;
  /// 2^k.
  [[nodiscard]] std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << k_; }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  unsigned k_;
};

/// Number of coordinates flipped by one move (squared step length), h >= 1.
class StepClass {
 public:
  explicit StepClass(unsigned h);

  [[nodiscard]] unsigned value() const noexcept { return h_; }

  friend bool operator==(StepClass, StepClass) = default;

 private:
  unsigned h_;
};

/// Throws CapacityError when k exceeds max_dim (or the word width).
void require_capacity(Dimension k, unsigned max_dim);

enum class Parity { Even, Odd };

const char* to_string(Parity p) noexcept;

class Vertex {
 public:
  /// Throws RangeError if bits has any bit set at position >= k.
  Vertex(Word bits, Dimension dim);

  /// Tuple entries must be 0 or 1; the tuple length is the dimension.
  static Vertex from_tuple(std::span<const int> tuple);

  [[nodiscard]] Word bits() const noexcept { return bits_; }
  [[nodiscard]] Dimension dim() const noexcept { return dim_; }
  /// Coordinate x_i, 1-based leftmost-first.
  [[nodiscard]] int coordinate(unsigned i) const;
  [[nodiscard]] std::vector<int> to_tuple() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  Word bits_;
  Dimension dim_;
};

/// Mask with bits 0..m-1 set, i.e. the leftmost m coordinates.
[[nodiscard]] Word prefix_mask(unsigned m);

/// Squared Euclidean distance, the number of differing coordinates.
[[nodiscard]] unsigned hamming(const Vertex& v, const Vertex& w);
[[nodiscard]] Parity parity(const Vertex& v) noexcept;
[[nodiscard]] Vertex complement(const Vertex& v) noexcept;
/// Flips coordinates 1..m. Throws RangeError if m > k.
[[nodiscard]] Vertex flip_prefix(const Vertex& v, unsigned m);

/// Tuple text "0 1 1 0 1", leftmost coordinate first.
[[nodiscard]] std::string format_tuple(const Vertex& v);

}  // namespace leapcycles

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "leapcycles/hypercube.hpp"

namespace leapcycles {

/// Ordered sequence of vertices sharing one dimension. Distinctness is not
/// enforced on append; ask for it with all_distinct().
class VertexPath {
 public:
  explicit VertexPath(Dimension dim) : dim_(dim) {}
  /// Every word must fit in dim; throws RangeError otherwise.
  VertexPath(Dimension dim, std::vector<Word> words);
  VertexPath(Dimension dim, std::initializer_list<Word> words)
      : VertexPath(dim, std::vector<Word>(words)) {}

  /// Builds a path from leftmost-first 0/1 tuples of equal length.
  static VertexPath from_tuples(std::span<const std::vector<int>> tuples);

  [[nodiscard]] Dimension dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
  [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return Vertex(words_[i], dim_); }
  [[nodiscard]] Vertex front() const { return (*this)[0]; }
  [[nodiscard]] Vertex back() const { return (*this)[size() - 1]; }
  [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }

  void reserve(std::size_t n) { words_.reserve(n); }
  /// Throws DimensionMismatch if v.dim() differs.
  void push_back(const Vertex& v);

  [[nodiscard]] bool all_distinct() const;

  friend bool operator==(const VertexPath&, const VertexPath&) = default;

 private:
  Dimension dim_;
  std::vector<Word> words_;
};

/// True when b is a rotation of a, or a rotation of a reversed.
[[nodiscard]] bool cyclically_equivalent(const VertexPath& a, const VertexPath& b);

}  // namespace leapcycles

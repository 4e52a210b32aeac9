#include "leapcycles/path.hpp"

#include <algorithm>
#include <string>

namespace leapcycles {

VertexPath::VertexPath(Dimension dim, std::vector<Word> words) : dim_(dim), words_(std::move(words)) {
  const Word outside = ~dim.mask();
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & outside) != 0) {
      throw RangeError("path vertex " + std::to_string(i) + " does not fit in dimension " +
                       std::to_string(dim.value()));
    }
  }
}

VertexPath VertexPath::from_tuples(std::span<const std::vector<int>> tuples) {
  if (tuples.empty()) throw InvalidInput("from_tuples: no tuples, dimension unknown");
  VertexPath path(Dimension(static_cast<unsigned>(tuples.front().size())));
  path.reserve(tuples.size());
  for (const auto& t : tuples) path.push_back(Vertex::from_tuple(t));
  return path;
}

void VertexPath::push_back(const Vertex& v) {
  if (v.dim() != dim_) {
    throw DimensionMismatch("cannot append a dimension-" + std::to_string(v.dim().value()) +
                            " vertex to a dimension-" + std::to_string(dim_.value()) + " path");
  }
  words_.push_back(v.bits());
}

bool VertexPath::all_distinct() const {
  std::vector<Word> sorted(words_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

bool is_rotation(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (b[shift] != a[0]) continue;
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = a[i] == b[(i + shift) % n];
    if (match) return true;
  }
  return false;
}

}  // namespace

bool cyclically_equivalent(const VertexPath& a, const VertexPath& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  if (a.empty()) return true;
  if (is_rotation(a.words(), b.words())) return true;
  std::vector<Word> reversed(b.words().rbegin(), b.words().rend());
  return is_rotation(a.words(), reversed);
}

}  // namespace leapcycles

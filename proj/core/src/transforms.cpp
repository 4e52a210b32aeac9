#include "leapcycles/transforms.hpp"

#include <string>
#include <vector>

namespace leapcycles {

VertexPath complement_odd_indices(const VertexPath& path) {
  const Word full = path.dim().mask();
  std::vector<Word> out(path.words().begin(), path.words().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] ^= full;
  return {path.dim(), std::move(out)};
}

VertexPath append_coordinate(const VertexPath& path, bool bit, unsigned max_dim) {
  const unsigned k = path.dim().value();
  if (k >= kWordBits) throw CapacityError("append_coordinate: dimension already at word width");
  const Dimension next(k + 1);
  require_capacity(next, max_dim);
  const Word extra = bit ? Word{1} << k : Word{0};
  std::vector<Word> out(path.words().begin(), path.words().end());
  for (auto& w : out) w |= extra;
  return {next, std::move(out)};
}

VertexPath flip_prefix_path(const VertexPath& path, unsigned m) {
  if (m > path.dim().value()) {
    throw RangeError("flip_prefix_path: m = " + std::to_string(m) + " exceeds dimension " +
                     std::to_string(path.dim().value()));
  }
  const Word mask = prefix_mask(m);
  std::vector<Word> out(path.words().begin(), path.words().end());
  for (auto& w : out) w ^= mask;
  return {path.dim(), std::move(out)};
}

VertexPath reverse_path(const VertexPath& path) {
  return {path.dim(), std::vector<Word>(path.words().rbegin(), path.words().rend())};
}

}  // namespace leapcycles

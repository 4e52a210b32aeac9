#include "leapcycles/graycode.hpp"

#include <bit>
#include <string>
#include <vector>

namespace leapcycles {

VertexPath gray_tour(Dimension k, unsigned max_dim) {
  require_capacity(k, max_dim);
  const std::uint64_t n = k.vertex_count();
  std::vector<Word> words(n);
  for (std::uint64_t j = 0; j < n; ++j) words[j] = static_cast<Word>(j ^ (j >> 1));
  return {k, std::move(words)};
}

namespace {

bool is_closed_unit_tour(const VertexPath& tour) {
  const auto w = tour.words();
  if (w.size() != tour.dim().vertex_count()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::popcount(w[i] ^ w[(i + 1) % w.size()]) != 1) return false;
  }
  return tour.all_distinct();
}

}  // namespace

VertexPath reflect_extend(const VertexPath& tour, unsigned max_dim) {
  const unsigned k = tour.dim().value();
  if (k >= kWordBits) throw CapacityError("reflect_extend: dimension already at word width");
  const Dimension next(k + 1);
  require_capacity(next, max_dim);
  if (!is_closed_unit_tour(tour)) {
    throw InvalidInput("reflect_extend: input is not a closed change-1 tour of dimension " +
                       std::to_string(k));
  }
  const auto w = tour.words();
  const Word high = Word{1} << k;
  std::vector<Word> out;
  out.reserve(2 * w.size());
  out.insert(out.end(), w.begin(), w.end());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(*it | high);
  return {next, std::move(out)};
}

}  // namespace leapcycles

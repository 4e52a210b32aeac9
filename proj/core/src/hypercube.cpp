#include "leapcycles/hypercube.hpp"

#include <bit>
#include <string>

namespace leapcycles {

Dimension::Dimension(unsigned k) : k_(k) {
  if (k == 0 || k > kWordBits) {
    throw RangeError("dimension must be in [1, " + std::to_string(kWordBits) + "], got " +
                     std::to_string(k));
  }
}

Word Dimension::mask() const noexcept {
  return k_ == kWordBits ? ~Word{0} : (Word{1} << k_) - 1;
}

StepClass::StepClass(unsigned h) : h_(h) {
  if (h == 0) throw RangeError("step class must be at least 1");
}

void require_capacity(Dimension k, unsigned max_dim) {
  if (max_dim > kWordBits) max_dim = kWordBits;
  if (k.value() > max_dim) {
    throw CapacityError("dimension " + std::to_string(k.value()) + " exceeds the capacity limit " +
                        std::to_string(max_dim));
  }
}

const char* to_string(Parity p) noexcept { return p == Parity::Even ? "even" : "odd"; }

Vertex::Vertex(Word bits, Dimension dim) : bits_(bits), dim_(dim) {
  if ((bits & ~dim.mask()) != 0) {
    throw RangeError("vertex " + std::to_string(bits) + " does not fit in dimension " +
                     std::to_string(dim.value()));
  }
}

Vertex Vertex::from_tuple(std::span<const int> tuple) {
  Dimension dim(static_cast<unsigned>(tuple.size()));
  Word bits = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] != 0 && tuple[i] != 1) {
      throw RangeError("coordinate " + std::to_string(i + 1) + " must be 0 or 1");
    }
    bits |= static_cast<Word>(tuple[i]) << i;
  }
  return {bits, dim};
}

int Vertex::coordinate(unsigned i) const {
  if (i == 0 || i > dim_.value()) throw RangeError("coordinate index out of range");
  return static_cast<int>((bits_ >> (i - 1)) & 1U);
}

std::vector<int> Vertex::to_tuple() const {
  std::vector<int> out(dim_.value());
  for (unsigned i = 0; i < dim_.value(); ++i) out[i] = static_cast<int>((bits_ >> i) & 1U);
  return out;
}

Word prefix_mask(unsigned m) {
  if (m > kWordBits) throw RangeError("prefix length exceeds word width");
  return m == kWordBits ? ~Word{0} : (Word{1} << m) - 1;
}

unsigned hamming(const Vertex& v, const Vertex& w) {
  if (v.dim() != w.dim()) {
    throw DimensionMismatch("hamming: dimensions " + std::to_string(v.dim().value()) + " and " +
                            std::to_string(w.dim().value()));
  }
  return static_cast<unsigned>(std::popcount(v.bits() ^ w.bits()));
}

Parity parity(const Vertex& v) noexcept {
  return (std::popcount(v.bits()) & 1) == 0 ? Parity::Even : Parity::Odd;
}

Vertex complement(const Vertex& v) noexcept { return {v.bits() ^ v.dim().mask(), v.dim()}; }

Vertex flip_prefix(const Vertex& v, unsigned m) {
  if (m > v.dim().value()) {
    throw RangeError("flip_prefix: m = " + std::to_string(m) + " exceeds dimension " +
                     std::to_string(v.dim().value()));
  }
  return {v.bits() ^ prefix_mask(m), v.dim()};
}

std::string format_tuple(const Vertex& v) {
  std::string out;
  out.reserve(2 * v.dim().value());
  for (unsigned i = 0; i < v.dim().value(); ++i) {
    if (i != 0) out.push_back(' ');
    out.push_back(((v.bits() >> i) & 1U) != 0 ? '1' : '0');
  }
  return out;
}

}  // namespace leapcycles

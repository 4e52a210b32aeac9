#include "leapcycles/constructor.hpp"

#include <stdexcept>
#include <string>

#include "leapcycles/graycode.hpp"
#include "leapcycles/transforms.hpp"
#include "leapcycles/verifier.hpp"

namespace leapcycles {

const char* to_string(Feasibility f) noexcept {
  switch (f) {
    case Feasibility::Feasible: return "Feasible";
    case Feasibility::InfeasibleParity: return "InfeasibleParity";
    case Feasibility::InfeasibleRange: return "InfeasibleRange";
    case Feasibility::InfeasibleDimension: return "InfeasibleDimension";
  }
  return "?";
}

FeasibilityVerdict feasibility(Dimension k, StepClass h) {
  const unsigned kv = k.value();
  const unsigned hv = h.value();
  if (kv < 2) {
    return {Feasibility::InfeasibleDimension,
            "dimension: k = " + std::to_string(kv) + " has only two vertices, a closed tour needs k >= 2"};
  }
  if (hv >= kv) {
    return {Feasibility::InfeasibleRange,
            "range: h = " + std::to_string(hv) + " >= k = " + std::to_string(kv) +
                ", at most one move is possible (only the opposite corner is reachable)"};
  }
  if (hv % 2 == 0) {
    return {Feasibility::InfeasibleParity,
            "parity: h = " + std::to_string(hv) +
                " is even, every move preserves vertex parity so only half of the vertices are reachable"};
  }
  return {Feasibility::Feasible, "feasible: h = " + std::to_string(hv) + " is odd and h < k = " +
                                     std::to_string(kv)};
}

namespace {

CycleCertificate certify(VertexPath path, StepClass h) {
  const Dimension dim = path.dim();
  if (!verify_cycle(path, h).valid) {
    throw std::logic_error("internal error: constructed path for k = " + std::to_string(dim.value()) +
                           ", h = " + std::to_string(h.value()) + " failed verification");
  }
  return {dim, h, std::move(path), true};
}

}  // namespace

CycleCertificate base_cycle(StepClass h, unsigned max_dim) {
  const unsigned hv = h.value();
  if (hv % 2 == 0) throw RangeError("base_cycle: h = " + std::to_string(hv) + " is even");
  if (hv == 1) return certify(gray_tour(Dimension(2), max_dim), h);
  if (hv + 1 > kWordBits) throw CapacityError("base_cycle: h + 1 exceeds word width");
  return certify(complement_odd_indices(gray_tour(Dimension(hv + 1), max_dim)), h);
}

CycleCertificate lift(const CycleCertificate& cycle, unsigned max_dim) {
  const unsigned k = cycle.dim.value();
  const unsigned h = cycle.step.value();
  if (!cycle.verified) throw InvalidInput("lift: input cycle is not verified");
  if (k < h + 1) {
    throw InvalidInput("lift: dimension " + std::to_string(k) + " is below h + 1 = " + std::to_string(h + 1));
  }
  // The path is the cycle with its closing edge removed. S1 keeps a 0 in the
  // new coordinate; S2 gets a 1, has its leftmost h - 1 coordinates flipped
  // and is reversed. The bridge S1.back -> S4.front and the closing edge
  // S4.back -> S1.front both flip exactly h coordinates.
  const VertexPath s1 = append_coordinate(cycle.path, false, max_dim);
  const VertexPath s2 = append_coordinate(cycle.path, true, max_dim);
  const VertexPath s4 = reverse_path(flip_prefix_path(s2, h - 1));

  std::vector<Word> joined;
  joined.reserve(s1.size() + s4.size());
  joined.insert(joined.end(), s1.words().begin(), s1.words().end());
  joined.insert(joined.end(), s4.words().begin(), s4.words().end());
  return certify(VertexPath(s1.dim(), std::move(joined)), cycle.step);
}

ConstructResult construct(Dimension k, StepClass h, unsigned max_dim) {
  auto verdict = feasibility(k, h);
  if (!verdict.feasible()) return verdict;
  require_capacity(k, max_dim);
  if (h.value() == 1) return certify(gray_tour(k, max_dim), h);

  CycleCertificate cycle = base_cycle(h, max_dim);
  while (cycle.dim.value() < k.value()) cycle = lift(cycle, max_dim);
  return cycle;
}

}  // namespace leapcycles

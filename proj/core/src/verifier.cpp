#include "leapcycles/verifier.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace leapcycles {

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::WrongLength: return "WrongLength";
    case ViolationKind::DuplicateVertex: return "DuplicateVertex";
    case ViolationKind::WrongStep: return "WrongStep";
    case ViolationKind::OpenEndpoints: return "OpenEndpoints";
    case ViolationKind::DimensionOverflow: return "DimensionOverflow";
  }
  return "?";
}

std::string describe(const Violation& v) {
  std::string out = to_string(v.kind);
  switch (v.kind) {
    case ViolationKind::WrongLength:
      out += " length=" + std::to_string(v.index);
      break;
    case ViolationKind::DuplicateVertex:
      out += " at " + std::to_string(v.index);
      if (v.other) out += " (first seen at " + std::to_string(*v.other) + ")";
      break;
    case ViolationKind::WrongStep:
    case ViolationKind::OpenEndpoints:
      out += " at " + std::to_string(v.index) + "-" + std::to_string(v.other.value_or(0));
      if (v.actual) out += " distance=" + std::to_string(*v.actual);
      break;
    case ViolationKind::DimensionOverflow:
      out += " at " + std::to_string(v.index);
      break;
  }
  return out;
}

std::size_t VerifyReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [kind](const Violation& v) { return v.kind == kind; }));
}

VerifyReport verify_cycle(Dimension k, std::span<const Word> words, StepClass h) {
  VerifyReport report;
  auto& out = report.violations;
  const std::uint64_t expected = k.vertex_count();
  const Word outside = ~k.mask();
  const unsigned step = h.value();

  if (words.size() != expected) {
    out.push_back({ViolationKind::WrongLength, words.size(), std::nullopt, std::nullopt});
  }

  std::vector<bool> seen(static_cast<std::size_t>(expected), false);
  std::vector<std::size_t> repeats;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if ((words[i] & outside) != 0) {
      out.push_back({ViolationKind::DimensionOverflow, i, std::nullopt, std::nullopt});
      continue;
    }
    if (seen[words[i]]) {
      repeats.push_back(i);
    } else {
      seen[words[i]] = true;
    }
  }
  // Second pass only when needed: recover the first occurrence of each repeat.
  if (!repeats.empty()) {
    std::vector<std::pair<Word, std::size_t>> first;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if ((words[i] & outside) == 0 && seen[words[i]]) {
        first.emplace_back(words[i], i);
        seen[words[i]] = false;
      }
    }
    std::sort(first.begin(), first.end());
    for (std::size_t i : repeats) {
      auto it = std::lower_bound(first.begin(), first.end(), std::pair<Word, std::size_t>{words[i], 0});
      out.push_back({ViolationKind::DuplicateVertex, i, it->second, std::nullopt});
    }
  }

  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const auto d = static_cast<unsigned>(std::popcount(words[i] ^ words[i + 1]));
    if (d != step) out.push_back({ViolationKind::WrongStep, i, i + 1, d});
  }
  if (!words.empty()) {
    const auto d = static_cast<unsigned>(std::popcount(words.back() ^ words.front()));
    if (d != step) out.push_back({ViolationKind::OpenEndpoints, words.size() - 1, 0, d});
  }

  report.valid = out.empty();
  return report;
}

VerifyReport verify_cycle(const VertexPath& path, StepClass h) {
  return verify_cycle(path.dim(), path.words(), h);
}

}  // namespace leapcycles

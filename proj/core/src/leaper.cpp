#include "leapcycles/leaper.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace leapcycles {

namespace {

constexpr std::array<CatalogEntry, 14> kCatalog{{
    {"wazir", 0, 1},
    {"ferz", 1, 1},
    {"dabbaba", 0, 2},
    {"knight", 1, 2},
    {"alfil", 2, 2},
    {"threeleaper", 0, 3},
    {"camel", 1, 3},
    {"zebra", 2, 3},
    {"tripper", 3, 3},
    {"fourleaper", 0, 4},
    {"giraffe", 1, 4},
    {"stag", 2, 4},
    {"antelope", 3, 4},
    {"commuter", 4, 4},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string label(const LeaperSpec& spec) {
  std::string pair = "(" + std::to_string(spec.a()) + "," + std::to_string(spec.b()) + ")-leaper";
  return spec.name() ? *spec.name() + " " + pair : pair;
}

}  // namespace

LeaperSpec::LeaperSpec(unsigned a, unsigned b, std::optional<std::string> name)
    : a_(a), b_(b), name_(std::move(name)) {
  if (b == 0) throw RangeError("leaper: b must be at least 1");
  if (a > b) {
    throw RangeError("leaper: expected a <= b, got (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

std::span<const CatalogEntry> leaper_catalog() noexcept { return kCatalog; }

LeaperSpec leaper_by_name(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& e : kCatalog) {
    if (e.name == key) return {e.a, e.b, std::string(e.name)};
  }
  std::string names;
  for (const auto& e : kCatalog) {
    if (!names.empty()) names += ", ";
    names += e.name;
  }
  throw InvalidInput("unknown leaper '" + std::string(name) + "'; known leapers: " + names);
}

std::optional<std::string_view> leaper_name(unsigned a, unsigned b) noexcept {
  for (const auto& e : kCatalog) {
    if (e.a == a && e.b == b) return e.name;
  }
  return std::nullopt;
}

StepClass leaper_step(const LeaperSpec& spec) { return StepClass(spec.a() * spec.a() + spec.b() * spec.b()); }

FeasibilityVerdict leaper_feasible(const LeaperSpec& spec, Dimension k) {
  const unsigned h = leaper_step(spec).value();
  if (k.value() < 2) {
    return {Feasibility::InfeasibleDimension,
            "dimension: k = " + std::to_string(k.value()) + ", a closed tour needs k >= 2"};
  }
  if ((spec.a() + spec.b()) % 2 == 0) {
    return {Feasibility::InfeasibleParity,
            "parity: " + label(spec) + " has a+b even, it never leaves its starting parity class (never feasible)"};
  }
  if (k.value() <= h) {
    return {Feasibility::InfeasibleRange, "range: " + label(spec) + " needs k > a^2+b^2 = " + std::to_string(h) +
                                              ", got k = " + std::to_string(k.value())};
  }
  return {Feasibility::Feasible, "feasible: " + label(spec) + " has a+b odd and k = " + std::to_string(k.value()) +
                                     " > a^2+b^2 = " + std::to_string(h)};
}

std::optional<unsigned> min_dimension(const LeaperSpec& spec) {
  if ((spec.a() + spec.b()) % 2 == 0) return std::nullopt;
  return leaper_step(spec).value() + 1;
}

LeaperVerdict leaper_verdict(const LeaperSpec& spec) {
  const auto k_min = min_dimension(spec);
  if (!k_min) {
    return {std::nullopt, "parity: a+b even, every move preserves vertex parity"};
  }
  return {k_min, "closed tours exist exactly for k >= a^2+b^2+1 = " + std::to_string(*k_min)};
}

}  // namespace leapcycles

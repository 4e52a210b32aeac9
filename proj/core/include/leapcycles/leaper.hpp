#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "leapcycles/constructor.hpp"
#include "leapcycles/hypercube.hpp"

namespace leapcycles {

/// An (a,b)-leaper normalized so that a <= b and b >= 1.
class LeaperSpec {
 public:
  /// Throws RangeError unless 0 <= a <= b and b >= 1. The name is cosmetic.
  LeaperSpec(unsigned a, unsigned b, std::optional<std::string> name = std::nullopt);

  [[nodiscard]] unsigned a() const noexcept { return a_; }
  [[nodiscard]] unsigned b() const noexcept { return b_; }
  [[nodiscard]] const std::optional<std::string>& name() const noexcept { return name_; }

 private:
  unsigned a_;
  unsigned b_;
  std::optional<std::string> name_;
};

struct CatalogEntry {
  std::string_view name;
  unsigned a;
  unsigned b;
};

/// The named leapers with b <= 4, ordered by (b, a).
[[nodiscard]] std::span<const CatalogEntry> leaper_catalog() noexcept;

/// Case-insensitive lookup. Throws InvalidInput listing the catalog.
[[nodiscard]] LeaperSpec leaper_by_name(std::string_view name);

/// Catalog name for the pair, if any.
[[nodiscard]] std::optional<std::string_view> leaper_name(unsigned a, unsigned b) noexcept;

/// h = a^2 + b^2.
[[nodiscard]] StepClass leaper_step(const LeaperSpec& spec);

/// Feasible iff a + b is odd and k > a^2 + b^2. An even a + b reports
/// InfeasibleParity for every k >= 2.
[[nodiscard]] FeasibilityVerdict leaper_feasible(const LeaperSpec& spec, Dimension k);

/// a^2 + b^2 + 1, or nullopt ("never") when a + b is even.
[[nodiscard]] std::optional<unsigned> min_dimension(const LeaperSpec& spec);

struct LeaperVerdict {
  /// nullopt means no k admits a closed tour.
  std::optional<unsigned> min_dim;
  std::string reason;

  [[nodiscard]] bool feasible_at(unsigned k) const noexcept { return min_dim && k >= *min_dim; }
};

[[nodiscard]] LeaperVerdict leaper_verdict(const LeaperSpec& spec);

}  // namespace leapcycles

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arithdyn/automorphism.hpp"
#include "arithdyn/enumerate.hpp"

namespace arithdyn {

/// deficit(α, B) = max over Q with h(Q) <= B of max(0, α h(Q) - h(φQ) - h(φ^-1 Q)):
/// the smallest c making h(φQ) + h(φ^-1 Q) >= α h(Q) - c hold on the stratum.
struct DeficitRow {
  double alpha = 0;
  double stratum = 0;
  double deficit = 0;
  /// A point attaining the deficit (empty when the deficit is 0).
  RationalPoint witness;
  std::size_t points = 0;
};

struct AlphaFitSummary {
  double alpha = 0;
  /// Least-squares slope of deficit against the stratum bound.
  double slope = 0;
  /// slope <= tolerance; nullopt with fewer than two strata.
  std::optional<bool> stable;
  double max_deficit = 0;
};

struct AlphaFitResult {
  std::vector<DeficitRow> rows;  // alpha-major, strata in the given order
  std::vector<AlphaFitSummary> summaries;
};

struct AlphaFitOptions {
  double slope_tolerance = 0.25;
  double alpha_cap = 64;
  SizeGuard guard;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

AlphaFitResult fit_alpha(const AffineAutomorphism& f, std::span<const double> alphas, std::span<const double> strata,
                         const AlphaFitOptions& options = {});

}  // namespace arithdyn

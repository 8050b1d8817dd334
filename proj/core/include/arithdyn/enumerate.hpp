#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arithdyn/automorphism.hpp"
#include "arithdyn/height.hpp"

namespace arithdyn {

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(double estimate, std::uint64_t cap);
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000;

/// Upper estimate E * (2E + 1)^r of the candidate count, E = floor(e^B).
double bounded_height_candidates(unsigned r, double bound);

/// Visits every point of A^r(Q) with height <= B exactly once:
/// (a_1/b, ..., a_r/b) with 1 <= b <= E, |a_i| <= E, gcd(b, a_1, ..., a_r) = 1.
/// Order: increasing b, then lexicographic a (from -E up).
/// Refuses (EnumerationCapExceeded) when the candidate estimate exceeds `cap`.
void for_each_bounded_height(unsigned r, double bound, const std::function<void(const RationalPoint&)>& visit,
                             std::uint64_t cap = kDefaultEnumerationCap);

std::vector<RationalPoint> enumerate_bounded_height(unsigned r, double bound,
                                                    std::uint64_t cap = kDefaultEnumerationCap);

struct PeriodicPoint {
  RationalPoint point;
  unsigned period = 0;
};

/// All points of height <= B with minimal period <= max_period, in enumeration order.
std::vector<PeriodicPoint> find_periodic_points(const AffineAutomorphism& f, double bound, unsigned max_period,
                                                const SizeGuard& guard = {},
                                                std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace arithdyn

#include "arithdyn/height_inequality.hpp"

#include <algorithm>
#include <stdexcept>

#include "arithdyn/growth_fit.hpp"
#include "arithdyn/height.hpp"

namespace arithdyn {

namespace {

struct Sample {
  RationalPoint point;
  Integer size;
  double h = 0;
  double h_image_sum = 0;  // h(φQ) + h(φ^-1 Q)
};

}  // namespace

AlphaFitResult fit_alpha(const AffineAutomorphism& f, std::span<const double> alphas, std::span<const double> strata,
                         const AlphaFitOptions& options) {
  if (alphas.empty() || strata.empty()) throw std::invalid_argument("need at least one alpha and one stratum");
  for (double a : alphas)
    if (!(a > 0) || a > options.alpha_cap) throw std::invalid_argument("alpha outside (0, cap]");
  for (double b : strata)
    if (!(b >= 0)) throw std::invalid_argument("strata bounds must be nonnegative");

  const double top = *std::max_element(strata.begin(), strata.end());
  std::vector<Sample> samples;
  for_each_bounded_height(
      static_cast<unsigned>(f.dim()), top,
      [&](const RationalPoint& q) {
        Sample s;
        s.point = q;
        s.size = height_size(q);
        s.h = log_abs(s.size);
        s.h_image_sum = weil_height(f.forward().apply(q, options.guard)) +
                        weil_height(f.inverse().apply(q, options.guard));
        samples.push_back(std::move(s));
      },
      options.enumeration_cap);

  AlphaFitResult result;
  for (double alpha : alphas) {
    std::vector<double> deficits;
    for (double stratum : strata) {
      DeficitRow row;
      row.alpha = alpha;
      row.stratum = stratum;
      for (const auto& s : samples) {
        if (!within_height_bound(s.size, stratum)) continue;
        ++row.points;
        const double gap = alpha * s.h - s.h_image_sum;
        if (gap > row.deficit) {
          row.deficit = gap;
          row.witness = s.point;
        }
      }
      deficits.push_back(row.deficit);
      result.rows.push_back(std::move(row));
    }
    AlphaFitSummary summary;
    summary.alpha = alpha;
    summary.max_deficit = *std::max_element(deficits.begin(), deficits.end());
    if (strata.size() >= 2) {
      summary.slope = least_squares_slope(strata, deficits);
      summary.stable = summary.slope <= options.slope_tolerance;
    }
    result.summaries.push_back(summary);
  }
  return result;
}

}  // namespace arithdyn

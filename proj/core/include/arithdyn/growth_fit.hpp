#pragma once

#include <span>
#include <vector>

namespace arithdyn {

/// Ordinary least-squares slope of ys against xs. Needs two distinct xs.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

enum class Regressor {
  log_b,  // N against log B
  b,      // N against B
  b_log,  // log N against B
};

/// Slope of the measured growth. With `last_half`, only the second half of
/// the schedule (index >= size/2) enters the fit, dropping small-B transients.
double fit_growth(std::span<const double> bounds, std::span<const double> counts, Regressor regressor,
                  bool last_half);

}  // namespace arithdyn

#include "arithdyn/growth_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace arithdyn {

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("slope fit needs two or more (x, y) pairs");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) throw std::invalid_argument("slope fit needs distinct x values");
  return sxy / sxx;
}

double fit_growth(std::span<const double> bounds, std::span<const double> counts, Regressor regressor,
                  bool last_half) {
  if (bounds.size() != counts.size()) throw std::invalid_argument("bounds and counts differ in length");
  const std::size_t start = last_half ? bounds.size() / 2 : 0;
  std::vector<double> xs, ys;
  for (std::size_t i = start; i < bounds.size(); ++i) {
    switch (regressor) {
      case Regressor::log_b:
        xs.push_back(std::log(bounds[i]));
        ys.push_back(counts[i]);
        break;
      case Regressor::b:
        xs.push_back(bounds[i]);
        ys.push_back(counts[i]);
        break;
      case Regressor::b_log:
        if (counts[i] <= 0) throw std::invalid_argument("log N needs positive counts");
        xs.push_back(bounds[i]);
        ys.push_back(std::log(counts[i]));
        break;
    }
  }
  return least_squares_slope(xs, ys);
}

}  // namespace arithdyn

#include "arithdyn/height.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arithdyn {

namespace {
constexpr double kExactCompareLimit = 700.0;
}

Integer height_size(std::span<const Rational> p) {
  const Integer b = lcm_of_denominators(p);
  Integer m = b;
  for (const auto& x : p) {
    Integer a = abs(x.get_num()) * (b / x.get_den());
    if (a > m) m = std::move(a);
  }
  return m;
}

double weil_height(std::span<const Rational> p) { return log_abs(height_size(p)); }

double height_tolerance(double bound) { return 1e-12 * std::max(1.0, std::abs(bound)); }

Integer size_bound(double bound) {
  if (bound < 0) return 0;
  if (bound >= kExactCompareLimit) throw std::overflow_error("height bound too large for integer enumeration");
  Integer e;
  mpz_set_d(e.get_mpz_t(), std::floor(std::exp(bound + height_tolerance(bound))));
  return e;
}

bool within_height_bound(const Integer& size, double bound) {
  if (bound < 0) return false;
  if (bound < kExactCompareLimit) return size <= size_bound(bound);
  return log_abs(size) <= bound + height_tolerance(bound);
}

}  // namespace arithdyn

#include "arithdyn/enumerate.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "arithdyn/orbit.hpp"

namespace arithdyn {

EnumerationCapExceeded::EnumerationCapExceeded(double estimate, std::uint64_t cap)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "bounded-height enumeration would visit an estimated " << std::setprecision(3) << estimate
           << " candidates, cap is " << cap;
        return os.str();
      }()),
      estimate_(estimate) {}

double bounded_height_candidates(unsigned r, double bound) {
  if (bound < 0) return 0;
  const double e = std::floor(std::exp(bound + height_tolerance(bound)));
  return e * std::pow(2 * e + 1, static_cast<double>(r));
}

void for_each_bounded_height(unsigned r, double bound, const std::function<void(const RationalPoint&)>& visit,
                             std::uint64_t cap) {
  if (r == 0) throw std::invalid_argument("dimension must be positive");
  if (bound < 0) return;
  const double estimate = bounded_height_candidates(r, bound);
  if (estimate > static_cast<double>(cap)) throw EnumerationCapExceeded(estimate, cap);

  const long e = size_bound(bound).get_si();
  std::vector<long> a(r);
  RationalPoint point(r);
  for (long b = 1; b <= e; ++b) {
    std::fill(a.begin(), a.end(), -e);
    for (;;) {
      unsigned long g = static_cast<unsigned long>(b);
      for (long ai : a) g = std::gcd(g, static_cast<unsigned long>(std::labs(ai)));
      if (g == 1) {
        for (unsigned i = 0; i < r; ++i) {
          point[i] = Rational(a[i], b);
          point[i].canonicalize();
        }
        visit(point);
      }
      // odometer over [-e, e]^r, last coordinate fastest
      unsigned i = r;
      while (i > 0 && a[i - 1] == e) a[--i] = -e;
      if (i == 0) break;
      ++a[i - 1];
    }
  }
}

std::vector<RationalPoint> enumerate_bounded_height(unsigned r, double bound, std::uint64_t cap) {
  std::vector<RationalPoint> out;
  for_each_bounded_height(r, bound, [&](const RationalPoint& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<PeriodicPoint> find_periodic_points(const AffineAutomorphism& f, double bound, unsigned max_period,
                                                const SizeGuard& guard, std::uint64_t cap) {
  std::vector<PeriodicPoint> out;
  for_each_bounded_height(
      static_cast<unsigned>(f.dim()), bound,
      [&](const RationalPoint& p) {
        if (auto period = detect_periodic(f, p, max_period, guard)) out.push_back({p, *period});
      },
      cap);
  return out;
}

}  // namespace arithdyn

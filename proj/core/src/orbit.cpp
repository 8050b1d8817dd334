#include "arithdyn/orbit.hpp"

#include <future>

namespace arithdyn {

RationalPoint iterate(const AffineAutomorphism& f, std::span<const Rational> p, long n, const SizeGuard& guard) {
  if (p.size() != f.dim()) throw DimensionMismatch("point dimension does not match map");
  const auto& map = n >= 0 ? f.forward() : f.inverse();
  RationalPoint x(p.begin(), p.end());
  for (long k = 0; k < (n >= 0 ? n : -n); ++k) x = map.apply(x, guard);
  return x;
}

std::vector<OrbitSample> orbit_samples(const AffineAutomorphism& f, std::span<const Rational> p, long n_from,
                                       long n_to, const SizeGuard& guard) {
  std::vector<OrbitSample> out;
  if (n_from > n_to) return out;
  RationalPoint x = iterate(f, p, n_from, guard);
  for (long n = n_from;; ++n) {
    out.push_back({n, x, weil_height(x)});
    if (n == n_to) break;
    x = f.forward().apply(x, guard);
  }
  return out;
}

std::optional<unsigned> detect_periodic(const AffineAutomorphism& f, std::span<const Rational> p,
                                        unsigned max_period, const SizeGuard& guard) {
  if (max_period < 1) throw std::invalid_argument("max_period must be >= 1");
  if (p.size() != f.dim()) throw DimensionMismatch("point dimension does not match map");
  const RationalPoint start(p.begin(), p.end());
  RationalPoint x = start;
  for (unsigned n = 1; n <= max_period; ++n) {
    x = f.forward().apply(x, guard);
    if (x == start) return n;
  }
  return std::nullopt;
}

PeriodicPointError::PeriodicPointError(unsigned period)
    : std::invalid_argument("point is periodic with period " + std::to_string(period) +
                            "; orbit counts are defined for non-periodic points"),
      period_(period) {}

namespace {

// Height sizes along one direction, extended on demand.
// Forward: step k is n = k. Backward: step k is n = -(k + 1).
class DirectionScan {
 public:
  DirectionScan(const PolyMap& map, const RationalPoint& start, bool forward, const SizeGuard& guard)
      : map_(map), start_(start), current_(start), forward_(forward), guard_(guard) {
    if (!forward_) advance();
    sizes_.push_back(height_size(current_));
  }

  const Integer& size(std::size_t step) {
    while (sizes_.size() <= step) {
      advance();
      if (current_ == start_) throw PeriodicPointError(static_cast<unsigned>(forward_ ? sizes_.size() : sizes_.size() + 1));
      sizes_.push_back(height_size(current_));
    }
    return sizes_[step];
  }

  long n_of(std::size_t step) const { return forward_ ? static_cast<long>(step) : -static_cast<long>(step + 1); }

 private:
  void advance() { current_ = map_.apply(current_, guard_); }

  const PolyMap& map_;
  const RationalPoint& start_;
  RationalPoint current_;
  bool forward_;
  SizeGuard guard_;
  std::vector<Integer> sizes_;
};

struct DirectionCount {
  unsigned long count = 0;
  long n_extreme = 0;
  bool truncated = false;
};

DirectionCount scan_direction(DirectionScan& scan, double bound, const CountPolicy& policy, long horizon,
                              bool forward) {
  DirectionCount out;
  const long steps = forward ? horizon + 1 : horizon;
  unsigned over = 0;
  for (long step = 0; step < steps; ++step) {
    out.n_extreme = scan.n_of(static_cast<std::size_t>(step));
    if (within_height_bound(scan.size(static_cast<std::size_t>(step)), bound)) {
      ++out.count;
      over = 0;
    } else if (policy.window && ++over >= *policy.window) {
      return out;
    }
  }
  out.truncated = true;
  return out;
}

long resolve_horizon(const AffineAutomorphism& f, const CountPolicy& policy) {
  if (policy.horizon) {
    if (*policy.horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
    return *policy.horizon;
  }
  if (f.has_unit_dynamical_degree())
    throw HorizonRequired("map '" + f.name() +
                          "' has dynamical degree 1: heights need not grow monotonically, pass an explicit horizon");
  return CountPolicy::kDefaultHorizon;
}

}  // namespace

std::vector<OrbitCountResult> count_orbit_schedule(const AffineAutomorphism& f, std::span<const Rational> p,
                                                   std::span<const double> bounds, const CountPolicy& policy) {
  if (p.size() != f.dim()) throw DimensionMismatch("point dimension does not match map");
  for (double b : bounds)
    if (!(b >= 0)) throw std::invalid_argument("height bounds must be nonnegative");
  if (policy.window && *policy.window == 0) throw std::invalid_argument("window must be positive");
  const long horizon = resolve_horizon(f, policy);
  const RationalPoint start(p.begin(), p.end());
  if (auto period = detect_periodic(f, start, policy.window.value_or(CountPolicy::kDefaultWindow), policy.guard))
    throw PeriodicPointError(*period);

  auto run = [&](bool forward) {
    std::vector<DirectionCount> counts;
    if (!forward && horizon == 0) {
      counts.resize(bounds.size());
      return counts;
    }
    DirectionScan scan(forward ? f.forward() : f.inverse(), start, forward, policy.guard);
    for (double b : bounds) counts.push_back(scan_direction(scan, b, policy, horizon, forward));
    return counts;
  };

  std::vector<DirectionCount> fwd, bwd;
  if (policy.parallel) {
    auto backward = std::async(std::launch::async, run, false);
    fwd = run(true);
    bwd = backward.get();
  } else {
    fwd = run(true);
    bwd = run(false);
  }

  std::vector<OrbitCountResult> out;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    OrbitCountResult r;
    r.bound = bounds[i];
    r.count = fwd[i].count + bwd[i].count;
    r.n_forward_max = fwd[i].n_extreme;
    r.n_backward_max = bwd[i].n_extreme;
    r.truncated_forward = fwd[i].truncated;
    r.truncated_backward = horizon > 0 && bwd[i].truncated;
    out.push_back(r);
  }
  return out;
}

OrbitCountResult count_orbit(const AffineAutomorphism& f, std::span<const Rational> p, double bound,
                             const CountPolicy& policy) {
  return count_orbit_schedule(f, p, std::span<const double>(&bound, 1), policy).front();
}

}  // namespace arithdyn

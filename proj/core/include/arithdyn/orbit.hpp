#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "arithdyn/automorphism.hpp"
#include "arithdyn/height.hpp"

namespace arithdyn {

struct OrbitSample {
  long n = 0;
  RationalPoint point;
  double height = 0;
};

/// φ^n(P); negative n iterates the inverse.
RationalPoint iterate(const AffineAutomorphism& f, std::span<const Rational> p, long n, const SizeGuard& guard = {});

/// Samples for n in [n_from, n_to], in increasing n.
std::vector<OrbitSample> orbit_samples(const AffineAutomorphism& f, std::span<const Rational> p, long n_from,
                                       long n_to, const SizeGuard& guard = {});

/// Smallest n in [1, max_period] with φ^n(P) = P. For an automorphism any
/// coincidence φ^n P = φ^m P already forces φ^(n-m) P = P, so comparing with
/// the start point is enough.
std::optional<unsigned> detect_periodic(const AffineAutomorphism& f, std::span<const Rational> p,
                                        unsigned max_period, const SizeGuard& guard = {});

class PeriodicPointError : public std::invalid_argument {
 public:
  explicit PeriodicPointError(unsigned period);
  unsigned period() const { return period_; }

 private:
  unsigned period_;
};

class HorizonRequired : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CountPolicy {
  static constexpr unsigned kDefaultWindow = 5;
  static constexpr long kDefaultHorizon = 64;

  /// Stop a direction after this many consecutive heights above B.
  /// nullopt scans the whole horizon (exhaustive mode).
  std::optional<unsigned> window = kDefaultWindow;
  /// Largest |n| scanned. Required for maps with dynamical degree 1.
  std::optional<long> horizon;
  SizeGuard guard;
  /// Scan the two directions on separate threads.
  bool parallel = true;
};

struct OrbitCountResult {
  double bound = 0;
  unsigned long count = 0;
  long n_forward_max = 0;
  long n_backward_max = 0;
  /// A direction stopped at the horizon; count is then a lower bound.
  bool truncated_forward = false;
  bool truncated_backward = false;
};

/// N(φ, P, B) under `policy`. Throws PeriodicPointError for periodic P,
/// HorizonRequired for δ = 1 maps without an explicit horizon.
OrbitCountResult count_orbit(const AffineAutomorphism& f, std::span<const Rational> p, double bound,
                             const CountPolicy& policy = {});

/// One result per bound; the orbit is computed once and shared.
std::vector<OrbitCountResult> count_orbit_schedule(const AffineAutomorphism& f, std::span<const Rational> p,
                                                   std::span<const double> bounds, const CountPolicy& policy = {});

}  // namespace arithdyn

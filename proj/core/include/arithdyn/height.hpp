#pragma once

#include <span>

#include "arithdyn/rational.hpp"

namespace arithdyn {

/// Point of affine r-space over Q, embedded in projective space as (1 : x_1 : ... : x_r).
using RationalPoint = RationalVector;

/// max(b, |a_1|, ..., |a_r|) where b is the lcm of the denominators and
/// a_i = b x_i. Those integers are coprime as a tuple, so this is the
/// multiplicative height of (1 : x_1 : ... : x_r).
Integer height_size(std::span<const Rational> p);

/// Logarithmic Weil height, natural log. The origin has height 0.
double weil_height(std::span<const Rational> p);

/// Bounds arrive as doubles (log 2 is not representable), so h <= B is
/// decided with a relative tie tolerance of 1e-12.
double height_tolerance(double bound);

/// Largest integer M with log M <= B (+ tolerance). Throws std::overflow_error past ~700.
Integer size_bound(double bound);

/// h(p) <= B for a point whose height_size is `size`.
bool within_height_bound(const Integer& size, double bound);

}  // namespace arithdyn

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace arithdyn {

// Exact rationals. mpq_class keeps gcd(num, den) = 1 and den > 0 as long as
// every value is canonicalized after construction from raw parts.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;

class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(std::uint64_t bits, std::uint64_t budget);
  /// Term-count overflow; bits() and budget() are 0.
  explicit SizeLimitExceeded(const std::string& what);

  std::uint64_t bits() const { return bits_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t bits_;
  std::uint64_t budget_;
};

/// Bit budget for integers appearing in numerators and denominators, plus a
/// term budget for symbolic products. Doubly exponential coefficient growth
/// and exponential term growth have to fail loudly instead of hanging.
struct SizeGuard {
  static constexpr std::uint64_t kDefaultBits = std::uint64_t{1} << 24;
  static constexpr std::uint64_t kDefaultTerms = std::uint64_t{1} << 20;

  std::uint64_t max_bits = kDefaultBits;
  /// Largest term count of a product; the number of term pairs multiplied is
  /// capped at 64 times this.
  std::uint64_t max_terms = kDefaultTerms;

  void check_product(std::size_t lhs_terms, std::size_t rhs_terms) const;
  void check_terms(std::size_t terms) const;

  void check(const Integer& z) const;
  void check(const Rational& q) const;
  void check(std::span<const Rational> v) const;
};

std::uint64_t bit_length(const Integer& z);

/// Parses `p/q`, `-p/q` or an integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` when the denominator is 1, `p/q` otherwise.
std::string to_string(const Rational& q);

/// Comma separated list of rationals, e.g. "1, -3/2, 0".
RationalVector parse_rational_list(std::string_view text);
std::string to_string(std::span<const Rational> v);

/// Natural logarithm of a positive integer of any size.
double log_abs(const Integer& z);

Integer lcm_of_denominators(std::span<const Rational> v);

}  // namespace arithdyn

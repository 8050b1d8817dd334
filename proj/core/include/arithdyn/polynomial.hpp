#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arithdyn/rational.hpp"

namespace arithdyn {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Total degree with a distinguished value for the zero polynomial.
/// There is no implicit conversion to an integer: callers have to decide
/// what the zero polynomial means for them.
class Degree {
 public:
  constexpr explicit Degree(unsigned value) : value_(value), neg_inf_(false) {}
  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return neg_inf_; }
  unsigned value() const;

  constexpr bool operator==(const Degree&) const = default;
  constexpr std::strong_ordering operator<=>(const Degree& o) const {
    if (neg_inf_ || o.neg_inf_) return o.neg_inf_ <=> neg_inf_;
    return value_ <=> o.value_;
  }

  std::string to_string() const;

 private:
  constexpr Degree() : value_(0), neg_inf_(true) {}
  unsigned value_;
  bool neg_inf_;
};

class Monomial {
 public:
  explicit Monomial(std::size_t dim) : exps_(dim, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t dim() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  unsigned total_degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Sparse polynomial in `dim` variables with exact rational coefficients.
/// No stored coefficient is ever zero.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit MultiPoly(std::size_t dim = 0) : dim_(dim) {}
  MultiPoly(std::size_t dim, TermMap terms);

  static MultiPoly constant(std::size_t dim, const Rational& c);
  static MultiPoly variable(std::size_t dim, std::size_t index);
  static MultiPoly term(const Monomial& m, const Rational& c);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  bool depends_on(std::size_t var) const;

  Degree degree() const;
  Degree degree_in(std::size_t var) const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  std::uint64_t max_coefficient_bits() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t dim_;
  TermMap terms_;
};

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, const SizeGuard& guard);
MultiPoly pow(const MultiPoly& p, unsigned k, const SizeGuard& guard = {});

Rational poly_eval(const MultiPoly& p, std::span<const Rational> x, const SizeGuard& guard = {});

/// p(q_1, ..., q_r), fully expanded. All q_i must share one dimension,
/// which becomes the dimension of the result.
MultiPoly poly_compose(const MultiPoly& p, std::span<const MultiPoly> q, const SizeGuard& guard = {});

/// Terms of top total degree. Throws std::invalid_argument on the zero polynomial.
MultiPoly leading_form(const MultiPoly& p);

/// x, y (dim 2); x, y, z (dim 3); x, y, z, w (dim 4); x1..xr otherwise.
std::vector<std::string> default_variable_names(std::size_t dim);

/// Canonical text: graded order, highest degree first; parses back to `p`.
std::string to_string(const MultiPoly& p, std::span<const std::string> vars);
std::string to_string(const MultiPoly& p);

}  // namespace arithdyn

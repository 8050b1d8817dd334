#include "arithdyn/rational.hpp"

#include <cmath>

#include "arithdyn/text_format.hpp"

namespace arithdyn {

SizeLimitExceeded::SizeLimitExceeded(std::uint64_t bits, std::uint64_t budget)
    : std::runtime_error("size limit exceeded: integer of " + std::to_string(bits) +
                         " bits, budget " + std::to_string(budget) + " bits"),
      bits_(bits),
      budget_(budget) {}

std::uint64_t bit_length(const Integer& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

SizeLimitExceeded::SizeLimitExceeded(const std::string& what)
    : std::runtime_error("size limit exceeded: " + what), bits_(0), budget_(0) {}

void SizeGuard::check_product(std::size_t lhs_terms, std::size_t rhs_terms) const {
  const auto work = static_cast<long double>(lhs_terms) * static_cast<long double>(rhs_terms);
  if (work > 64.0L * static_cast<long double>(max_terms))
    throw SizeLimitExceeded("product of " + std::to_string(lhs_terms) + " by " + std::to_string(rhs_terms) +
                            " terms, term budget " + std::to_string(max_terms));
}

void SizeGuard::check_terms(std::size_t terms) const {
  if (terms > max_terms)
    throw SizeLimitExceeded("polynomial with " + std::to_string(terms) + " terms, term budget " +
                            std::to_string(max_terms));
}

void SizeGuard::check(const Integer& z) const {
  const auto bits = bit_length(z);
  if (bits > max_bits) throw SizeLimitExceeded(bits, max_bits);
}

void SizeGuard::check(const Rational& q) const {
  check(q.get_num());
  check(q.get_den());
}

void SizeGuard::check(std::span<const Rational> v) const {
  for (const auto& q : v) check(q);
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
  } else {
    if (!parse_integer(trim(s.substr(0, slash)), num) || !parse_integer(trim(s.substr(slash + 1)), den))
      throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  if (trim(text).empty()) return out;
  for (auto part : split_top_level(text, ',')) out.push_back(parse_rational(part));
  return out;
}

std::string to_string(std::span<const Rational> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

double log_abs(const Integer& z) {
  if (z == 0) throw std::domain_error("log of zero");
  Integer a = abs(z);
  if (bit_length(a) <= 53) return std::log(a.get_d());
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, a.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer b = 1;
  for (const auto& q : v) mpz_lcm(b.get_mpz_t(), b.get_mpz_t(), q.get_den_mpz_t());
  return b;
}

}  // namespace arithdyn

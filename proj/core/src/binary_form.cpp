#include "arithdyn/binary_form.hpp"

#include <algorithm>

namespace arithdyn {

namespace {

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
using UPoly = std::vector<Rational>;

void strip(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

UPoly remainder(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const auto shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    strip(a);
  }
  return a;
}

UPoly quotient(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const auto shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    strip(a);
  }
  return q;
}

UPoly monic(UPoly u) {
  const Rational lead = u.back();
  for (auto& c : u) c /= lead;
  return u;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    auto r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly derivative(const UPoly& u) {
  UPoly d;
  for (std::size_t k = 1; k < u.size(); ++k) d.push_back(u[k] * static_cast<unsigned long>(k));
  strip(d);
  return d;
}

// f = y^v * f1(x, y) with f1(x, 1) of degree deg(f) - v.
struct Dehomogenized {
  unsigned y_power = 0;
  UPoly in_x;
};

void require_binary_form(const MultiPoly& f) {
  if (f.dim() != 2) throw std::invalid_argument("binary form expected: polynomial has " +
                                                std::to_string(f.dim()) + " variables");
  if (f.is_zero()) throw std::invalid_argument("binary form must be nonzero");
  if (!f.is_homogeneous()) throw std::invalid_argument("binary form must be homogeneous");
}

Dehomogenized dehomogenize(const MultiPoly& f) {
  const auto n = f.degree().value();
  unsigned max_x = 0;
  for (const auto& [m, c] : f.terms()) max_x = std::max(max_x, m[0]);
  Dehomogenized out;
  out.y_power = n - max_x;
  out.in_x.assign(max_x + 1, 0);
  for (const auto& [m, c] : f.terms()) out.in_x[m[0]] = c;
  return out;
}

MultiPoly homogenize(const UPoly& u, unsigned y_power) {
  const auto deg = static_cast<unsigned>(u.size() - 1);
  MultiPoly out(2);
  for (unsigned k = 0; k <= deg; ++k) {
    if (u[k] == 0) continue;
    Monomial m(2);
    m[0] = k;
    m[1] = deg - k + y_power;
    out += MultiPoly::term(m, u[k]);
  }
  return out;
}

}  // namespace

MultiPoly make_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  // leading term: top total degree, then largest exponent vector
  const auto d = p.degree().value();
  const Monomial* lead = nullptr;
  for (const auto& [m, c] : p.terms())
    if (m.total_degree() == d && (!lead || m > *lead)) lead = &m;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.coefficient(*lead) < 0) scale = -scale;
  return p * scale;
}

MultiPoly binary_form_gcd(const MultiPoly& f, const MultiPoly& g) {
  require_binary_form(f);
  require_binary_form(g);
  const auto a = dehomogenize(f);
  const auto b = dehomogenize(g);
  const auto common = gcd(a.in_x, b.in_x);
  return make_primitive(homogenize(common, std::min(a.y_power, b.y_power)));
}

MultiPoly binary_form_squarefree(const MultiPoly& f) {
  require_binary_form(f);
  const auto a = dehomogenize(f);
  UPoly core = a.in_x;
  if (core.size() > 1) core = quotient(core, gcd(core, derivative(core)));
  return make_primitive(homogenize(core, a.y_power > 0 ? 1u : 0u));
}

}  // namespace arithdyn

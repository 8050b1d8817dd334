#include "arithdyn/polynomial.hpp"

#include <algorithm>

namespace arithdyn {

unsigned Degree::value() const {
  if (neg_inf_) throw std::logic_error("degree of the zero polynomial has no integer value");
  return value_;
}

std::string Degree::to_string() const { return neg_inf_ ? "-inf" : std::to_string(value_); }

unsigned Monomial::total_degree() const {
  unsigned s = 0;
  for (auto e : exps_) s += e;
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("monomial dimensions differ");
  Monomial m(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m[i] = a[i] + b[i];
  return m;
}

MultiPoly::MultiPoly(std::size_t dim, TermMap terms) : dim_(dim) {
  for (auto& [m, c] : terms) add_term(m, c);
}

MultiPoly MultiPoly::constant(std::size_t dim, const Rational& c) {
  MultiPoly p(dim);
  p.add_term(Monomial(dim), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionMismatch("variable index out of range");
  Monomial m(dim);
  m[index] = 1;
  return term(m, 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p(m.dim());
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.dim() != dim_) throw DimensionMismatch("monomial dimension does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.total_degree() == d; });
}

bool MultiPoly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] > 0; });
}

Degree MultiPoly::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return Degree(d);
}

Degree MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return Degree::neg_infinity();
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[var]);
  return Degree(d);
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(dim_)); }

std::uint64_t MultiPoly::max_coefficient_bits() const {
  std::uint64_t bits = 0;
  for (const auto& [m, c] : terms_)
    bits = std::max({bits, bit_length(c.get_num()), bit_length(c.get_den())});
  return bits;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("polynomial dimensions differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("polynomial dimensions differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, const SizeGuard& guard) {
  if (a.dim() != b.dim()) throw DimensionMismatch("polynomial dimensions differ");
  guard.check_product(a.num_terms(), b.num_terms());
  MultiPoly::TermMap acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [it, inserted] = acc.try_emplace(ma * mb, 0);
      it->second += ca * cb;
    }
  }
  guard.check_terms(acc.size());
  for (const auto& [m, c] : acc) guard.check(c);
  return MultiPoly(a.dim(), std::move(acc));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b, SizeGuard{}); }

MultiPoly pow(const MultiPoly& p, unsigned k, const SizeGuard& guard) {
  MultiPoly result = MultiPoly::constant(p.dim(), 1);
  MultiPoly base = p;
  while (k) {
    if (k & 1u) result = multiply(result, base, guard);
    k >>= 1u;
    if (k) base = multiply(base, base, guard);
  }
  return result;
}

Rational poly_eval(const MultiPoly& p, std::span<const Rational> x, const SizeGuard& guard) {
  if (x.size() != p.dim())
    throw DimensionMismatch("evaluation point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                            std::to_string(p.dim()) + " variables");
  // powers[i][k] = x_i^k, filled lazily up to the largest exponent used
  std::vector<std::vector<Rational>> powers(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) powers[i].push_back(1);
  auto power = [&](std::size_t i, std::uint32_t k) -> const Rational& {
    auto& row = powers[i];
    while (row.size() <= k) {
      row.push_back(row.back() * x[i]);
      guard.check(row.back());
    }
    return row[k];
  };
  Rational sum = 0;
  Rational term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (m[i]) term *= power(i, m[i]);
    sum += term;
  }
  guard.check(sum);
  return sum;
}

MultiPoly poly_compose(const MultiPoly& p, std::span<const MultiPoly> q, const SizeGuard& guard) {
  if (q.size() != p.dim())
    throw DimensionMismatch("composition needs " + std::to_string(p.dim()) + " substitutions, got " +
                            std::to_string(q.size()));
  if (q.empty()) return MultiPoly(0, p.terms());
  const auto out_dim = q.front().dim();
  for (const auto& qi : q)
    if (qi.dim() != out_dim) throw DimensionMismatch("substituted polynomials have different dimensions");

  std::vector<std::vector<MultiPoly>> powers(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) powers[i].push_back(MultiPoly::constant(out_dim, 1));
  auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& row = powers[i];
    while (row.size() <= k) row.push_back(multiply(row.back(), q[i], guard));
    return row[k];
  };

  MultiPoly result(out_dim);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(out_dim, c);
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (m[i]) term = multiply(term, power(i, m[i]), guard);
    result += term;
  }
  return result;
}

MultiPoly leading_form(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("leading form of the zero polynomial");
  const auto d = p.degree().value();
  MultiPoly::TermMap top;
  for (const auto& [m, c] : p.terms())
    if (m.total_degree() == d) top.emplace(m, c);
  return MultiPoly(p.dim(), std::move(top));
}

std::vector<std::string> default_variable_names(std::size_t dim) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  if (dim >= 2 && dim <= 4) {
    for (std::size_t i = 0; i < dim; ++i) names.emplace_back(small[i]);
  } else {
    for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

std::string to_string(const MultiPoly& p, std::span<const std::string> vars) {
  if (vars.size() != p.dim()) throw DimensionMismatch("variable name count does not match dimension");
  if (p.is_zero()) return "0";

  std::vector<const MultiPoly::TermMap::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    const auto da = a->first.total_degree();
    const auto db = b->first.total_degree();
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  const auto names = default_variable_names(p.dim());
  return to_string(p, names);
}

}  // namespace arithdyn

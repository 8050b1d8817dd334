#include "arithdyn/automorphism.hpp"

#include <algorithm>

#include "arithdyn/binary_form.hpp"

namespace arithdyn {

PolyMap::PolyMap(std::vector<MultiPoly> components) : components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.dim() != components_.size())
      throw DimensionMismatch("map component has " + std::to_string(c.dim()) + " variables, expected " +
                              std::to_string(components_.size()));
}

PolyMap PolyMap::identity(std::size_t dim) {
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < dim; ++i) comps.push_back(MultiPoly::variable(dim, i));
  return PolyMap(std::move(comps));
}

Degree PolyMap::degree() const {
  Degree d = Degree::neg_infinity();
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

RationalVector PolyMap::apply(std::span<const Rational> x, const SizeGuard& guard) const {
  RationalVector out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(poly_eval(c, x, guard));
  return out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner, const SizeGuard& guard) {
  std::vector<MultiPoly> comps;
  comps.reserve(outer.dim());
  for (const auto& c : outer.components()) comps.push_back(poly_compose(c, inner.components(), guard));
  return PolyMap(std::move(comps));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::user: return "user";
    case Family::linear: return "linear";
    case Family::henon: return "henon";
    case Family::triangular: return "triangular";
    case Family::elementary: return "elementary";
    case Family::anick: return "anick";
    case Family::nagata_twisted: return "nagata_twisted";
    case Family::product: return "product";
  }
  return "unknown";
}

namespace {

std::optional<std::size_t> first_non_identity(const PolyMap& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m[i] != MultiPoly::variable(m.dim(), i)) return i;
  return std::nullopt;
}

}  // namespace

ValidationReport validate(const PolyMap& forward, const PolyMap& inverse, const SizeGuard& guard) {
  ValidationReport report;
  if (forward.dim() != inverse.dim()) {
    report.ok = false;
    report.message = "forward and inverse have different dimensions";
    return report;
  }
  for (auto dir : {Direction::forward, Direction::inverse}) {
    const auto composed =
        dir == Direction::forward ? compose(forward, inverse, guard) : compose(inverse, forward, guard);
    if (auto bad = first_non_identity(composed)) {
      report.ok = false;
      report.failing_composition = dir;
      report.coordinate = *bad + 1;
      report.message = std::string(dir == Direction::forward ? "forward∘inverse" : "inverse∘forward") +
                       " differs from the identity at coordinate " + std::to_string(*bad + 1) + ": got " +
                       to_string(composed[*bad]);
      return report;
    }
  }
  return report;
}

InvalidAutomorphism::InvalidAutomorphism(ValidationReport report)
    : std::invalid_argument("not an automorphism: " + report.message), report_(std::move(report)) {}

AffineAutomorphism::AffineAutomorphism(PolyMap forward, PolyMap inverse, std::string name, MapMetadata meta,
                                       std::vector<std::string> variables)
    : forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      name_(std::move(name)),
      meta_(std::move(meta)),
      variables_(std::move(variables)) {
  if (forward_.dim() < 2) throw std::invalid_argument("automorphisms need dimension >= 2");
  if (variables_.empty()) variables_ = default_variable_names(forward_.dim());
  if (variables_.size() != forward_.dim()) throw DimensionMismatch("variable list does not match dimension");
  for (const auto* m : {&forward_, &inverse_}) {
    const auto d = m->degree();
    if (d.is_neg_infinity() || d.value() < 1)
      throw InvalidAutomorphism({false, std::nullopt, std::nullopt, "map degree must be at least 1"});
  }
  auto report = arithdyn::validate(forward_, inverse_);
  if (!report.ok) throw InvalidAutomorphism(std::move(report));
}

bool AffineAutomorphism::has_unit_dynamical_degree() const {
  return meta_.dynamical_degree && *meta_.dynamical_degree == 1;
}

ValidationReport validate(const AffineAutomorphism& f) { return validate(f.forward(), f.inverse()); }

AlgebraicDegrees algebraic_degree(const AffineAutomorphism& f) {
  return {f.forward().degree().value(), f.inverse().degree().value()};
}

IndeterminacyForm indeterminacy_form_dim2(const AffineAutomorphism& f, Direction direction) {
  if (f.dim() != 2) throw DimensionMismatch("indeterminacy forms are only computed in dimension 2");
  const auto& map = f.direction(direction);
  const auto d = map.degree().value();
  if (d <= 1) return {MultiPoly::constant(2, 1), 0};

  std::optional<MultiPoly> acc;
  for (const auto& c : map.components()) {
    if (c.is_zero() || c.degree().value() != d) continue;
    const auto top = leading_form(c);
    acc = acc ? binary_form_gcd(*acc, top) : top;
  }
  auto form = binary_form_squarefree(*acc);
  const auto deg = form.degree().value();
  return {std::move(form), deg};
}

bool is_regular_dim2(const AffineAutomorphism& f) {
  if (f.dim() != 2) throw DimensionMismatch("regularity is only decided in dimension 2");
  const auto degs = algebraic_degree(f);
  if (degs.forward <= 1 || degs.inverse <= 1) return false;
  const auto zf = indeterminacy_form_dim2(f, Direction::forward);
  const auto zi = indeterminacy_form_dim2(f, Direction::inverse);
  return binary_form_gcd(zf.gcd_form, zi.gcd_form).degree().value() == 0;
}

bool check_regular_degree_relation(unsigned d, unsigned d_inv, unsigned r, unsigned l) {
  if (l < 1 || l + 1 > r) throw std::invalid_argument("need 1 <= l <= r - 1");
  Integer lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), d, l);
  mpz_ui_pow_ui(rhs.get_mpz_t(), d_inv, r - l);
  return lhs == rhs;
}

}  // namespace arithdyn

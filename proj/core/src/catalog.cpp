#include "arithdyn/catalog.hpp"

#include <set>

#include "arithdyn/poly_parser.hpp"
#include "arithdyn/text_format.hpp"

namespace arithdyn {

namespace {

MultiPoly var(std::size_t dim, std::size_t i) { return MultiPoly::variable(dim, i); }

/// p(x) in one variable, re-expressed as a polynomial in variable `index` of `dim`.
MultiPoly embed_univariate(const MultiPoly& p, std::size_t dim, std::size_t index) {
  if (p.dim() != 1) throw DimensionMismatch("expected a univariate polynomial");
  const MultiPoly sub = var(dim, index);
  return poly_compose(p, std::span<const MultiPoly>(&sub, 1));
}

/// Re-expresses a map component in a larger space, shifting variables by `offset`.
MultiPoly shift_variables(const MultiPoly& p, std::size_t total_dim, std::size_t offset) {
  std::vector<MultiPoly> subs;
  for (std::size_t i = 0; i < p.dim(); ++i) subs.push_back(var(total_dim, offset + i));
  return poly_compose(p, subs);
}

MultiPoly parse_univariate(const std::string& text) {
  static const std::vector<std::string> x{"x"};
  return parse_poly(text, x);
}

unsigned require_univariate_degree(const MultiPoly& p, unsigned min_degree) {
  const auto d = p.degree();
  if (d.is_neg_infinity() || d.value() < min_degree)
    throw std::invalid_argument("polynomial p must have degree >= " + std::to_string(min_degree));
  return d.value();
}

MapMetadata metadata(Family family, std::optional<Rational> delta, std::optional<Rational> delta_inv) {
  MapMetadata m;
  m.family = family;
  m.dynamical_degree = std::move(delta);
  m.inverse_dynamical_degree = std::move(delta_inv);
  return m;
}

Rational nonzero(const Rational& a, const char* what) {
  if (a == 0) throw std::invalid_argument(std::string(what) + " must be nonzero");
  return a;
}

}  // namespace

AffineAutomorphism make_henon(const MultiPoly& p, const Rational& a) {
  const auto d = require_univariate_degree(p, 2);
  nonzero(a, "henon parameter a");
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  PolyMap forward({y, embed_univariate(p, 2, 1) + a * x});
  PolyMap inverse({(y - embed_univariate(p, 2, 0)) * (1 / a), x});
  return AffineAutomorphism(std::move(forward), std::move(inverse), "henon",
                            metadata(Family::henon, Rational(d), Rational(d)));
}

AffineAutomorphism make_henon_general(const MultiPoly& p, const Rational& a) {
  const auto d = require_univariate_degree(p, 2);
  nonzero(a, "henon parameter a");
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  PolyMap forward({embed_univariate(p, 2, 0) - a * y, x});
  PolyMap inverse({y, (embed_univariate(p, 2, 1) - x) * (1 / a)});
  return AffineAutomorphism(std::move(forward), std::move(inverse), "henon_general",
                            metadata(Family::henon, Rational(d), Rational(d)));
}

AffineAutomorphism make_henon_power(unsigned d, const Rational& a) {
  if (d < 2) throw std::invalid_argument("henon_power needs d >= 2");
  nonzero(a, "henon_power parameter a");
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  PolyMap forward({y + a * pow(x, d), x});
  PolyMap inverse({y, x - a * pow(y, d)});
  return AffineAutomorphism(std::move(forward), std::move(inverse), "henon_power",
                            metadata(Family::henon, Rational(d), Rational(d)));
}

AffineAutomorphism make_triangular(const RationalVector& diagonal, const std::vector<MultiPoly>& shifts) {
  const auto r = diagonal.size();
  if (r < 2 || shifts.size() != r) throw std::invalid_argument("triangular map needs r >= 2 coefficients and r shifts");
  for (std::size_t i = 0; i < r; ++i) {
    nonzero(diagonal[i], "triangular coefficient");
    if (shifts[i].dim() != r) throw DimensionMismatch("triangular shift has wrong dimension");
    for (std::size_t j = 0; j <= i; ++j)
      if (shifts[i].depends_on(j))
        throw std::invalid_argument("triangular shift F" + std::to_string(i + 1) +
                                    " may only use later variables");
  }
  std::vector<MultiPoly> fwd;
  for (std::size_t i = 0; i < r; ++i) fwd.push_back(diagonal[i] * var(r, i) + shifts[i]);

  // back-substitution: x_i = (X_i - F_i(x_{i+1}, ..., x_r)) / a_i
  std::vector<MultiPoly> inv(r, MultiPoly(r));
  for (std::size_t k = r; k-- > 0;) {
    std::vector<MultiPoly> subs;
    for (std::size_t j = 0; j < r; ++j) subs.push_back(j <= k ? var(r, j) : inv[j]);
    inv[k] = (var(r, k) - poly_compose(shifts[k], subs)) * (1 / diagonal[k]);
  }
  auto meta = metadata(Family::triangular, Rational(1), Rational(1));
  meta.diagonal = diagonal;
  return AffineAutomorphism(PolyMap(std::move(fwd)), PolyMap(std::move(inv)), "triangular", std::move(meta));
}

AffineAutomorphism make_elementary(std::size_t dim, std::size_t index, const MultiPoly& shift) {
  if (index >= dim) throw std::invalid_argument("elementary index out of range");
  if (shift.dim() != dim) throw DimensionMismatch("elementary shift has wrong dimension");
  if (shift.depends_on(index)) throw std::invalid_argument("elementary shift may not use its own coordinate");
  std::vector<MultiPoly> fwd, inv;
  for (std::size_t i = 0; i < dim; ++i) {
    fwd.push_back(i == index ? var(dim, i) + shift : var(dim, i));
    inv.push_back(i == index ? var(dim, i) - shift : var(dim, i));
  }
  auto meta = metadata(Family::elementary, Rational(1), Rational(1));
  meta.diagonal.assign(dim, Rational(1));
  return AffineAutomorphism(PolyMap(std::move(fwd)), PolyMap(std::move(inv)), "elementary", std::move(meta));
}

AffineAutomorphism make_anick() {
  const auto x = var(4, 0), y = var(4, 1), z = var(4, 2), w = var(4, 3);
  const auto c = x * z + y * w;
  PolyMap forward({x - c * w, y + c * z, z, w});
  PolyMap inverse({x + c * w, y - c * z, z, w});
  return AffineAutomorphism(std::move(forward), std::move(inverse), "anick",
                            metadata(Family::anick, Rational(1), Rational(1)));
}

AffineAutomorphism make_nagata_twisted() {
  const auto X = var(3, 0), Y = var(3, 1), Z = var(3, 2);
  const auto u = Y * Z + X * X;
  const auto s = X * Z + Y * Y;
  PolyMap forward({Y - Rational(2) * u * X - u * u * Z, X + u * Z, Z});
  PolyMap inverse({Y - s * Z, X + Rational(2) * s * Y - s * s * Z, Z});
  return AffineAutomorphism(std::move(forward), std::move(inverse), "nagata_twisted",
                            metadata(Family::nagata_twisted, std::nullopt, std::nullopt),
                            {"X", "Y", "Z"});
}

AffineAutomorphism make_product(const AffineAutomorphism& left, const AffineAutomorphism& right) {
  const auto r = left.dim() + right.dim();
  std::vector<MultiPoly> fwd, inv;
  for (const auto* part : {&left, &right}) {
    const auto offset = part == &left ? 0 : left.dim();
    for (const auto& c : part->forward().components()) fwd.push_back(shift_variables(c, r, offset));
    for (const auto& c : part->inverse().components()) inv.push_back(shift_variables(c, r, offset));
  }
  MapMetadata meta;
  meta.family = Family::product;
  const auto& ml = left.metadata();
  const auto& mr = right.metadata();
  if (ml.dynamical_degree && mr.dynamical_degree)
    meta.dynamical_degree = std::max(*ml.dynamical_degree, *mr.dynamical_degree);
  if (ml.inverse_dynamical_degree && mr.inverse_dynamical_degree)
    meta.inverse_dynamical_degree = std::max(*ml.inverse_dynamical_degree, *mr.inverse_dynamical_degree);
  meta.blocks = {std::make_shared<const AffineAutomorphism>(left), std::make_shared<const AffineAutomorphism>(right)};
  return AffineAutomorphism(PolyMap(std::move(fwd)), PolyMap(std::move(inv)),
                            "product(" + left.name() + "," + right.name() + ")", std::move(meta));
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"henon", "(y, p(y) + a x)", {{"p", "x^2 + 1"}, {"a", "1"}}},
      {"henon_general", "(p(x) - a y, x)", {{"p", "x^2"}, {"a", "1"}}},
      {"henon_power", "(y + a x^d, x)", {{"d", "3"}, {"a", "1"}}},
      {"triangular", "(a1 x1 + F1(x2, ...), ..., ar xr + Fr)", {{"a", "2, 1"}, {"F", "y^2; 1"}}},
      {"elementary", "x_i -> x_i + P(other coordinates)", {{"dim", "2"}, {"index", "2"}, {"P", "x^2 + 1"}}},
      {"anick", "(x - (xz+yw) w, y + (xz+yw) z, z, w)", {}},
      {"nagata_twisted", "(Y - 2uX - u^2 Z, X + uZ, Z), u = YZ + X^2", {}},
      {"rotation", "(-y, x)", {}},
      {"identity", "identity map", {{"dim", "2"}}},
      {"product", "blockwise product of two catalog maps", {{"left", "triangular"}, {"right", "henon_general"}}},
  };
}

AffineAutomorphism catalog(std::string_view name, const CatalogParams& given) {
  const auto entries = catalog_entries();
  const CatalogEntry* entry = nullptr;
  for (const auto& e : entries)
    if (e.name == name) entry = &e;
  if (!entry) throw UnknownMapError("unknown map '" + std::string(name) + "'");

  CatalogParams params = entry->defaults;
  for (const auto& [k, v] : given) {
    const bool nested = name == "product" && (k.rfind("left.", 0) == 0 || k.rfind("right.", 0) == 0);
    if (!nested && !entry->defaults.count(k))
      throw std::invalid_argument("map '" + std::string(name) + "' has no parameter '" + k + "'");
    params[k] = v;
  }
  auto rational = [&](const char* key) { return parse_rational(params.at(key)); };
  auto natural = [&](const char* key) {
    const auto q = parse_rational(params.at(key));
    if (q.get_den() != 1 || q < 0) throw std::invalid_argument(std::string("parameter ") + key + " must be a natural number");
    return static_cast<unsigned>(q.get_num().get_ui());
  };

  if (name == "henon") return make_henon(parse_univariate(params.at("p")), rational("a"));
  if (name == "henon_general") return make_henon_general(parse_univariate(params.at("p")), rational("a"));
  if (name == "henon_power") return make_henon_power(natural("d"), rational("a"));
  if (name == "triangular") {
    const auto a = parse_rational_list(params.at("a"));
    const auto vars = default_variable_names(a.size());
    std::vector<MultiPoly> shifts;
    for (auto part : split_top_level(params.at("F"), ';')) shifts.push_back(parse_poly(part, vars));
    return make_triangular(a, shifts);
  }
  if (name == "elementary") {
    const auto dim = natural("dim");
    const auto index = natural("index");
    if (index < 1) throw std::invalid_argument("elementary index is 1-based");
    return make_elementary(dim, index - 1, parse_poly(params.at("P"), default_variable_names(dim)));
  }
  if (name == "anick") return make_anick();
  if (name == "nagata_twisted") return make_nagata_twisted();
  if (name == "rotation") {
    const auto x = var(2, 0), y = var(2, 1);
    return AffineAutomorphism(PolyMap({-y, x}), PolyMap({y, -x}), "rotation",
                              metadata(Family::linear, Rational(1), Rational(1)));
  }
  if (name == "identity") {
    const auto dim = natural("dim");
    return AffineAutomorphism(PolyMap::identity(dim), PolyMap::identity(dim), "identity",
                              metadata(Family::linear, Rational(1), Rational(1)));
  }
  // product
  CatalogParams left, right;
  for (const auto& [k, v] : params) {
    if (k.rfind("left.", 0) == 0) left[k.substr(5)] = v;
    if (k.rfind("right.", 0) == 0) right[k.substr(6)] = v;
  }
  return make_product(catalog(params.at("left"), left), catalog(params.at("right"), right));
}

}  // namespace arithdyn

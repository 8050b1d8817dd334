#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arithdyn/automorphism.hpp"

namespace arithdyn {

using CatalogParams = std::map<std::string, std::string>;

class UnknownMapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  CatalogParams defaults;
};

/// Families with analytically constructed inverses:
///
///   henon           (y, p(y) + a x)                 p in x, deg p >= 2, a != 0
///   henon_general   (p(x) - a y, x)                 p in x, deg p >= 2, a != 0
///   henon_power     (y + a x^d, x)                  d >= 2, a != 0
///   triangular      (a_i x_i + F_i(x_{i+1}, ...))   a = "a1, ..., ar", F = "F1; ...; Fr"
///   elementary      x_i -> x_i + P(others)          dim, index (1-based), P
///   anick           (x - (xz+yw) w, y + (xz+yw) z, z, w)
///   nagata_twisted  (Y - 2uX - u^2 Z, X + uZ, Z), u = YZ + X^2
///   rotation        (-y, x)
///   identity        dim
///   product         left=<name>, right=<name>, with left.<key> / right.<key> params
///
/// Unknown names throw UnknownMapError; bad parameters std::invalid_argument.
AffineAutomorphism catalog(std::string_view name, const CatalogParams& params = {});

std::vector<CatalogEntry> catalog_entries();

AffineAutomorphism make_henon(const MultiPoly& p_univariate, const Rational& a);
AffineAutomorphism make_henon_general(const MultiPoly& p_univariate, const Rational& a);
AffineAutomorphism make_henon_power(unsigned d, const Rational& a);
AffineAutomorphism make_triangular(const RationalVector& diagonal, const std::vector<MultiPoly>& shifts);
AffineAutomorphism make_elementary(std::size_t dim, std::size_t index, const MultiPoly& shift);
AffineAutomorphism make_anick();
AffineAutomorphism make_nagata_twisted();
AffineAutomorphism make_product(const AffineAutomorphism& left, const AffineAutomorphism& right);

}  // namespace arithdyn

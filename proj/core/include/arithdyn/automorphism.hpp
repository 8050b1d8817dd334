#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithdyn/polynomial.hpp"

namespace arithdyn {

/// r polynomials in r variables, read as a self-map of affine r-space.
class PolyMap {
 public:
  explicit PolyMap(std::vector<MultiPoly> components);
  static PolyMap identity(std::size_t dim);

  std::size_t dim() const { return components_.size(); }
  const std::vector<MultiPoly>& components() const { return components_; }
  const MultiPoly& operator[](std::size_t i) const { return components_[i]; }

  /// Max total degree of the components.
  Degree degree() const;

  RationalVector apply(std::span<const Rational> x, const SizeGuard& guard = {}) const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::vector<MultiPoly> components_;
};

/// outer ∘ inner
PolyMap compose(const PolyMap& outer, const PolyMap& inner, const SizeGuard& guard = {});

enum class Direction { forward, inverse };

enum class Family {
  user,
  linear,
  henon,  // generalized Hénon maps, either orientation
  triangular,
  elementary,
  anick,
  nagata_twisted,
  product,
};

std::string to_string(Family f);

class AffineAutomorphism;

/// Facts about catalog maps that cannot be recomputed cheaply.
struct MapMetadata {
  Family family = Family::user;
  /// Exact dynamical degrees when known for the family.
  std::optional<Rational> dynamical_degree;
  std::optional<Rational> inverse_dynamical_degree;
  /// Diagonal coefficients a_i of a triangular map (all 1 for elementary maps).
  std::vector<Rational> diagonal;
  /// Blockwise factors of a product map, in coordinate order.
  std::vector<std::shared_ptr<const AffineAutomorphism>> blocks;
};

struct ValidationReport {
  bool ok = true;
  /// Which composition failed: forward∘inverse (Direction::forward) or inverse∘forward.
  std::optional<Direction> failing_composition;
  /// 1-based coordinate of the first mismatch.
  std::optional<std::size_t> coordinate;
  std::string message;
};

ValidationReport validate(const PolyMap& forward, const PolyMap& inverse, const SizeGuard& guard = {});

class InvalidAutomorphism : public std::invalid_argument {
 public:
  explicit InvalidAutomorphism(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Polynomial automorphism of affine r-space (r >= 2) with an explicit
/// polynomial inverse. Construction verifies both compositions symbolically.
class AffineAutomorphism {
 public:
  AffineAutomorphism(PolyMap forward, PolyMap inverse, std::string name = {}, MapMetadata meta = {},
                     std::vector<std::string> variables = {});

  std::size_t dim() const { return forward_.dim(); }
  const PolyMap& forward() const { return forward_; }
  const PolyMap& inverse() const { return inverse_; }
  const PolyMap& direction(Direction d) const { return d == Direction::forward ? forward_ : inverse_; }
  const std::string& name() const { return name_; }
  const MapMetadata& metadata() const { return meta_; }
  const std::vector<std::string>& variables() const { return variables_; }

  /// True when the dynamical degree is known to be 1.
  bool has_unit_dynamical_degree() const;

 private:
  PolyMap forward_;
  PolyMap inverse_;
  std::string name_;
  MapMetadata meta_;
  std::vector<std::string> variables_;
};

ValidationReport validate(const AffineAutomorphism& f);

struct AlgebraicDegrees {
  unsigned forward = 0;
  unsigned inverse = 0;
};

AlgebraicDegrees algebraic_degree(const AffineAutomorphism& f);

/// Binary form (in the two affine variables) whose zeros on the line at
/// infinity are the indeterminacy points of the chosen direction.
struct IndeterminacyForm {
  MultiPoly gcd_form;
  unsigned degree = 0;
};

/// Dimension 2 only. Homogenizing (x0^d : P1 : P2) and setting x0 = 0 leaves
/// the top forms of the components of full degree d; the gcd of those forms,
/// reduced to its squarefree part, cuts out Z. Degree-1 maps return the
/// constant form 1 (empty locus).
IndeterminacyForm indeterminacy_form_dim2(const AffineAutomorphism& f, Direction direction);

/// deg > 1 both ways and the two indeterminacy loci are disjoint.
bool is_regular_dim2(const AffineAutomorphism& f);

/// d^l == d_inv^(r - l); requires 1 <= l <= r - 1.
bool check_regular_degree_relation(unsigned d, unsigned d_inv, unsigned r, unsigned l);

}  // namespace arithdyn

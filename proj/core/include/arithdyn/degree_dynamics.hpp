#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arithdyn/automorphism.hpp"
#include "arithdyn/height.hpp"

namespace arithdyn {

struct DegreeSequence {
  std::string label;
  /// (n, deg φ^n) for n = 1, 2, ...
  std::vector<std::pair<unsigned, unsigned>> entries;
  /// Composition hit the bit budget; entries hold the computed prefix.
  bool truncated = false;

  /// deg(m + n) <= deg(m) deg(n) for every recorded m + n.
  bool is_submultiplicative() const;
};

DegreeSequence degree_sequence(const AffineAutomorphism& f, unsigned n_max, const SizeGuard& guard = {},
                               Direction direction = Direction::forward);

/// min_n deg(φ^n)^(1/n): an upper bound for δ(φ), converging to it (Fekete).
struct DynDegreeEstimate {
  double upper_bound = 1;
  unsigned at_n = 0;
  std::optional<Rational> exact_claim;
};

DynDegreeEstimate dyn_degree_estimate(const DegreeSequence& seq, std::optional<Rational> exact_claim = {});

/// 2 / log δ1 = 1 / log δ + 1 / log δ'; δ1 = 1 when both degrees are 1.
/// Mixed input (one degree 1, the other > 1) throws std::domain_error.
double delta_one(double delta, double delta_inv);

/// Exact δ1 when it is rational: equal arguments, or both 1.
std::optional<Rational> delta_one_exact(const Rational& delta, const Rational& delta_inv);

/// δ1 + 1/δ1
double index_upper_bound(double delta_one);
Rational index_upper_bound(const Rational& delta_one);

/// Larger root of t^2 - α t + 1; requires α > 2.
double a_of_alpha(double alpha);

/// c / (α - 2); requires α > 2.
double periodic_height_bound(double alpha, double c);

/// Bracket of liminf/limsup N(φ,P,B) / log B implied by the height inequality.
struct CountBracket {
  double lower_coeff = 0;  // 1/log d + 1/log d'
  double upper_coeff = 0;  // 2/log a(α)
  /// lower > upper: α is not admissible for these degrees.
  bool consistent = true;
  std::string warning;
};

CountBracket count_bracket(double alpha, unsigned d, unsigned d_inv);

enum class GrowthForm {
  log_b,            // N ~ C log B
  linear_b,         // N ≍ B
  exp_rate,         // log N ≍ B (C = rate when known)
  faster_than_log,  // N / log B -> ∞
};

std::string to_string(GrowthForm f);

struct Prediction {
  GrowthForm form = GrowthForm::log_b;
  std::optional<double> coefficient;
  std::string description;
};

/// What the asymptotic results say about one (map family, point) pair.
struct FamilyDescriptor {
  enum class Kind { regular, triangular, anick, nagata_twisted, unit_dynamical_degree };

  Kind kind = Kind::regular;
  // regular
  unsigned r = 2;
  unsigned l = 1;
  double d = 2;
  // triangular / elementary
  RationalVector diagonal;
  // triangular, nagata_twisted: the point being counted
  RationalPoint point;
};

Prediction predicted_asymptote(const FamilyDescriptor& desc);

/// Builds the descriptor from catalog metadata. Product maps dispatch per
/// block: periodic blocks are ignored, a single moving block decides alone,
/// and among several the largest dynamical degree > 1 wins. Throws
/// std::invalid_argument for maps without usable metadata.
FamilyDescriptor describe(const AffineAutomorphism& f, std::span<const Rational> point,
                          unsigned periodic_check = 16, const SizeGuard& guard = {});

struct GrowthLemmaRow {
  unsigned n = 0;
  double lhs = 0;  // h(φ^n P) + h(φ^-n P)
  double rhs = 0;  // (a - 1/a)(a^n + a^-n)(h(P) - c/(α - 2))
  double slack = 0;
};

struct GrowthLemmaReport {
  double alpha = 0;
  double c = 0;
  bool pass = true;
  double min_slack = 0;
  std::optional<unsigned> first_violation;
  std::vector<GrowthLemmaRow> rows;
};

GrowthLemmaReport check_growth_lemma(const AffineAutomorphism& f, std::span<const Rational> p, double alpha, double c,
                                     unsigned n_max, const SizeGuard& guard = {});

}  // namespace arithdyn

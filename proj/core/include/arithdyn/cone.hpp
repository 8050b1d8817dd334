#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arithdyn/rational.hpp"

namespace arithdyn {

/// Class in Pic_Q(V), coordinates in a fixed basis of rank ρ.
using DivisorClass = RationalVector;

/// Resolution data in a fixed Picard basis. The effective cone is the
/// nonnegative span of `effective_generators`; a class D is nef-admissible iff
/// f(D) >= 0 for every row f of `nef_functionals`.
struct ResolutionData {
  std::string label;
  std::size_t rank = 0;
  DivisorClass pi_H;
  DivisorClass psi_H;
  DivisorClass psi_prime_H;
  std::vector<DivisorClass> effective_generators;
  std::vector<RationalVector> nef_functionals;
};

class InvalidResolutionData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks vector lengths, pi_H in the effective span, f(pi_H) >= 0 for all
/// nef functionals. The last two make feasibility in α downward closed.
void validate(const ResolutionData& data);

/// psi_H + psi_prime_H - α pi_H
DivisorClass divisor_class_of_alpha(const ResolutionData& data, const Rational& alpha);

/// Exact test: D is a nonnegative combination of the effective generators.
bool in_effective_cone(const ResolutionData& data, const DivisorClass& d);

/// Exact test: every nef functional is >= 0 on D.
bool is_nef_admissible(const ResolutionData& data, const DivisorClass& d);

struct AlphaResult {
  enum class Kind { finite, plus_infinity, minus_infinity };

  Kind kind = Kind::minus_infinity;
  Rational value;
  /// eff: λ with D(value) = Σ λ_j g_j, λ >= 0.
  RationalVector combination;
  /// nef: the functional vanishing on D(value).
  std::optional<std::size_t> binding_functional;

  bool is_finite() const { return kind == Kind::finite; }
  std::string value_string() const;
};

/// sup{α : D(α) effective}, from an exact rational simplex (Bland's rule).
AlphaResult alpha_max_eff(const ResolutionData& data);

/// sup{α : D(α) nef}, closed form: min over f(pi_H) > 0 of f(u)/f(pi_H), u = psi_H + psi_prime_H.
AlphaResult alpha_max_nef(const ResolutionData& data);

/// Re-verifies a certificate exactly against the data.
bool verify_eff_certificate(const ResolutionData& data, const AlphaResult& result);
bool verify_nef_certificate(const ResolutionData& data, const AlphaResult& result);

struct NefBoundReport {
  AlphaResult nef;
  double bound = 0;  // δ1 + 1/δ1
  bool consistent = true;
  std::string warning;
};

/// Flags data whose nef index exceeds δ1 + 1/δ1: such data cannot come from a
/// resolution of a map with these dynamical degrees.
NefBoundReport nef_bound_consistency(const ResolutionData& data, double delta, double delta_inv);

// Standard-form LP used by the eff solver, exposed for testing.
struct LinearProgram {
  // maximize objective·x subject to rows·x = rhs, x >= 0
  std::vector<RationalVector> rows;
  RationalVector rhs;
  RationalVector objective;
};

struct LpSolution {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  RationalVector x;
  Rational value;
};

LpSolution solve_exact(const LinearProgram& lp);

}  // namespace arithdyn

#include "arithdyn/degree_dynamics.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "arithdyn/orbit.hpp"

namespace arithdyn {

bool DegreeSequence::is_submultiplicative() const {
  std::map<unsigned, unsigned> deg(entries.begin(), entries.end());
  for (const auto& [m, dm] : deg)
    for (const auto& [n, dn] : deg) {
      auto it = deg.find(m + n);
      if (it != deg.end() && static_cast<unsigned long>(it->second) > static_cast<unsigned long>(dm) * dn) return false;
    }
  return true;
}

DegreeSequence degree_sequence(const AffineAutomorphism& f, unsigned n_max, const SizeGuard& guard,
                               Direction direction) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  DegreeSequence seq;
  seq.label = f.name();
  const auto& base = f.direction(direction);
  PolyMap power = base;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) {
      try {
        power = compose(base, power, guard);
      } catch (const SizeLimitExceeded&) {
        seq.truncated = true;
        break;
      }
    }
    seq.entries.emplace_back(n, power.degree().value());
  }
  return seq;
}

DynDegreeEstimate dyn_degree_estimate(const DegreeSequence& seq, std::optional<Rational> exact_claim) {
  if (seq.entries.empty()) throw std::invalid_argument("empty degree sequence");
  DynDegreeEstimate est;
  est.upper_bound = INFINITY;
  for (const auto& [n, deg] : seq.entries) {
    const double v = std::pow(static_cast<double>(deg), 1.0 / n);
    if (v < est.upper_bound) {
      est.upper_bound = v;
      est.at_n = n;
    }
  }
  est.exact_claim = std::move(exact_claim);
  return est;
}

double delta_one(double delta, double delta_inv) {
  if (!(delta >= 1) || !(delta_inv >= 1)) throw std::domain_error("dynamical degrees must be >= 1");
  if (delta == 1 && delta_inv == 1) return 1;
  if (delta == 1 || delta_inv == 1)
    throw std::domain_error("mixed dynamical degrees (one equal to 1, one above 1) have no defined delta_one");
  const double l = std::log(delta);
  const double li = std::log(delta_inv);
  return std::exp(2 * l * li / (l + li));
}

std::optional<Rational> delta_one_exact(const Rational& delta, const Rational& delta_inv) {
  if (delta < 1 || delta_inv < 1) throw std::domain_error("dynamical degrees must be >= 1");
  if ((delta == 1) != (delta_inv == 1))
    throw std::domain_error("mixed dynamical degrees (one equal to 1, one above 1) have no defined delta_one");
  if (delta == delta_inv) return delta;
  return std::nullopt;
}

double index_upper_bound(double d1) {
  if (!(d1 >= 1)) throw std::domain_error("delta_one must be >= 1");
  return d1 + 1 / d1;
}

Rational index_upper_bound(const Rational& d1) {
  if (d1 < 1) throw std::domain_error("delta_one must be >= 1");
  return Rational(d1 + 1 / d1);
}

double a_of_alpha(double alpha) {
  if (!(alpha > 2)) throw std::domain_error("a(alpha) needs alpha > 2");
  return (alpha + std::sqrt(alpha * alpha - 4)) / 2;
}

double periodic_height_bound(double alpha, double c) {
  if (!(alpha > 2)) throw std::domain_error("periodic height bound needs alpha > 2");
  if (c < 0) throw std::domain_error("c must be nonnegative");
  return c / (alpha - 2);
}

CountBracket count_bracket(double alpha, unsigned d, unsigned d_inv) {
  if (d < 2 || d_inv < 2) throw std::domain_error("count bracket needs degrees >= 2");
  CountBracket b;
  b.lower_coeff = 1 / std::log(static_cast<double>(d)) + 1 / std::log(static_cast<double>(d_inv));
  b.upper_coeff = 2 / std::log(a_of_alpha(alpha));
  // equality is the collapsed case α = d + 1/d; allow rounding there
  if (b.lower_coeff > b.upper_coeff * (1 + 1e-12)) {
    b.consistent = false;
    b.warning = "lower coefficient exceeds upper coefficient: alpha is not admissible for these degrees";
  }
  return b;
}

std::string to_string(GrowthForm f) {
  switch (f) {
    case GrowthForm::log_b: return "C*log(B)";
    case GrowthForm::linear_b: return "Theta(B)";
    case GrowthForm::exp_rate: return "log N = Theta(B)";
    case GrowthForm::faster_than_log: return "N/log(B) -> inf";
  }
  return "unknown";
}

Prediction predicted_asymptote(const FamilyDescriptor& desc) {
  using Kind = FamilyDescriptor::Kind;
  switch (desc.kind) {
    case Kind::regular: {
      if (desc.l < 1 || desc.l >= desc.r || !(desc.d > 1)) throw std::invalid_argument("bad regular descriptor");
      const double c = (static_cast<double>(desc.r) / desc.l) / std::log(desc.d);
      return {GrowthForm::log_b, c, "regular automorphism: N ~ (r/l) log B / log d"};
    }
    case Kind::triangular: {
      if (desc.point.size() != desc.diagonal.size()) throw std::invalid_argument("triangular descriptor needs the point");
      for (std::size_t i = 0; i < desc.diagonal.size(); ++i) {
        const auto& a = desc.diagonal[i];
        // the only rational roots of unity are 1 and -1
        if (a != 1 && a != -1 && desc.point[i] != 0)
          return {GrowthForm::linear_b, std::nullopt, "triangular, some a_i not a root of unity with x_i != 0: N ≍ B"};
      }
      return {GrowthForm::exp_rate, std::nullopt, "triangular, every relevant a_i a root of unity: log N ≍ B"};
    }
    case Kind::anick:
      return {GrowthForm::exp_rate, 1.0, "Anick map: N ~ c e^B"};
    case Kind::nagata_twisted: {
      if (desc.point.size() != 3) throw std::invalid_argument("nagata_twisted descriptor needs the point");
      if (desc.point[2] != 0) return {GrowthForm::log_b, 2 / std::log(4.0), "Nagata-twisted, Z != 0: N ~ 2 log_4 B"};
      return {GrowthForm::log_b, 2 / std::log(3.0), "Nagata-twisted, Z = 0: N ~ 2 log_3 B"};
    }
    case Kind::unit_dynamical_degree:
      return {GrowthForm::faster_than_log, std::nullopt, "dynamical degree 1: N / log B -> infinity"};
  }
  throw std::invalid_argument("unknown family descriptor");
}

FamilyDescriptor describe(const AffineAutomorphism& f, std::span<const Rational> point, unsigned periodic_check,
                          const SizeGuard& guard) {
  using Kind = FamilyDescriptor::Kind;
  if (point.size() != f.dim()) throw DimensionMismatch("point dimension does not match map");
  const auto& meta = f.metadata();
  FamilyDescriptor desc;
  desc.point.assign(point.begin(), point.end());
  switch (meta.family) {
    case Family::henon:
      desc.kind = Kind::regular;
      desc.r = 2;
      desc.l = 1;
      desc.d = meta.dynamical_degree->get_d();
      return desc;
    case Family::triangular:
    case Family::elementary:
      desc.kind = Kind::triangular;
      desc.diagonal = meta.diagonal;
      if (meta.family == Family::elementary) desc.diagonal.assign(f.dim(), Rational(1));
      return desc;
    case Family::anick:
      desc.kind = Kind::anick;
      return desc;
    case Family::nagata_twisted:
      desc.kind = Kind::nagata_twisted;
      return desc;
    case Family::linear:
      desc.kind = Kind::unit_dynamical_degree;
      return desc;
    case Family::product: {
      // h of a product point is the max of the block heights up to O(1), so the
      // fastest-growing non-periodic block decides the count.
      std::size_t offset = 0;
      std::vector<std::pair<const AffineAutomorphism*, RationalPoint>> moving;
      std::optional<double> fastest;
      bool unknown_degree = false;
      for (const auto& block : meta.blocks) {
        RationalPoint sub(point.begin() + static_cast<long>(offset),
                          point.begin() + static_cast<long>(offset + block->dim()));
        offset += block->dim();
        if (detect_periodic(*block, sub, periodic_check, guard)) continue;
        const auto& bm = block->metadata();
        if (!bm.dynamical_degree) unknown_degree = true;
        if (bm.dynamical_degree && *bm.dynamical_degree > 1)
          fastest = std::max(fastest.value_or(1.0), bm.dynamical_degree->get_d());
        moving.emplace_back(block.get(), std::move(sub));
      }
      if (moving.empty()) throw std::invalid_argument("point is periodic in every block");
      if (moving.size() == 1) return describe(*moving.front().first, moving.front().second, periodic_check, guard);
      if (unknown_degree) throw std::invalid_argument("product with a moving block of unknown dynamical degree");
      if (fastest) {
        desc.kind = Kind::regular;
        desc.r = 2;
        desc.l = 1;
        desc.d = *fastest;
        return desc;
      }
      desc.kind = Kind::unit_dynamical_degree;
      return desc;
    }
    case Family::user:
      break;
  }
  if (f.has_unit_dynamical_degree()) {
    desc.kind = Kind::unit_dynamical_degree;
    return desc;
  }
  throw std::invalid_argument("map '" + f.name() + "' carries no family metadata to predict from");
}

GrowthLemmaReport check_growth_lemma(const AffineAutomorphism& f, std::span<const Rational> p, double alpha, double c,
                                     unsigned n_max, const SizeGuard& guard) {
  const double a = a_of_alpha(alpha);
  if (auto period = detect_periodic(f, p, std::max(1u, n_max), guard)) throw PeriodicPointError(*period);
  GrowthLemmaReport report;
  report.alpha = alpha;
  report.c = c;
  report.min_slack = INFINITY;
  const double h0 = weil_height(p);
  const double shift = h0 - c / (alpha - 2);
  RationalPoint fwd(p.begin(), p.end());
  RationalPoint bwd = fwd;
  for (unsigned n = 1; n <= n_max; ++n) {
    fwd = f.forward().apply(fwd, guard);
    bwd = f.inverse().apply(bwd, guard);
    GrowthLemmaRow row;
    row.n = n;
    row.lhs = weil_height(fwd) + weil_height(bwd);
    row.rhs = (a - 1 / a) * (std::pow(a, n) + std::pow(a, -static_cast<double>(n))) * shift;
    row.slack = row.lhs - row.rhs;
    if (row.slack < report.min_slack) report.min_slack = row.slack;
    if (row.slack < 0 && !report.first_violation) {
      report.first_violation = n;
      report.pass = false;
    }
    report.rows.push_back(row);
  }
  if (report.rows.empty()) report.min_slack = 0;
  return report;
}

}  // namespace arithdyn

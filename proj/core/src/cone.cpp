#include "arithdyn/cone.hpp"

#include <cmath>

#include "arithdyn/degree_dynamics.hpp"

namespace arithdyn {

namespace {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Dense tableau; column `width` holds the right-hand side.
class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis, std::size_t width)
      : rows_(std::move(rows)), basis_(std::move(basis)), width_(width) {}

  enum class Outcome { optimal, unbounded };

  // Bland's rule: lowest-index improving column, ties in the ratio test go
  // to the lowest-index basic variable. Cannot cycle.
  Outcome maximize(const RationalVector& cost, std::size_t allowed_columns) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_columns && !entering; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced > 0) entering = j;
      }
      if (!entering) return Outcome::optimal;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& a = rows_[i][*entering];
        if (a <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return Outcome::unbounded;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational factor = rows_[i][c];
      for (std::size_t j = 0; j <= width_; ++j) rows_[i][j] -= factor * rows_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  Rational value(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rows_[i][width_];
    return v;
  }

  RationalVector solution(std::size_t n) const {
    RationalVector x(n, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n) x[basis_[i]] = rows_[i][width_];
    return x;
  }

  std::vector<RationalVector>& rows() { return rows_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

 private:
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
  std::size_t width_;
};

}  // namespace

LpSolution solve_exact(const LinearProgram& lp) {
  const std::size_t m = lp.rows.size();
  const std::size_t n = lp.objective.size();
  if (lp.rhs.size() != m) throw std::invalid_argument("LP rhs length mismatch");
  for (const auto& row : lp.rows)
    if (row.size() != n) throw std::invalid_argument("LP row length mismatch");

  // phase 1: artificial variable per row, rows signed so rhs >= 0
  const std::size_t width = n + m;
  std::vector<RationalVector> rows;
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(width + 1, Rational(0));
    const bool flip = lp.rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
    row[n + i] = 1;
    row[width] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
    rows.push_back(std::move(row));
    basis.push_back(n + i);
  }
  Tableau tab(std::move(rows), std::move(basis), width);

  RationalVector phase1(width, Rational(0));
  for (std::size_t j = n; j < width; ++j) phase1[j] = -1;
  tab.maximize(phase1, width);

  LpSolution sol;
  if (tab.value(phase1) < 0) {
    sol.status = LpSolution::Status::infeasible;
    return sol;
  }

  // drive artificials out of the basis; rows where that is impossible are redundant
  for (std::size_t i = 0; i < tab.basis().size();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (tab.rows()[i][j] != 0) col = j;
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }

  RationalVector phase2(width, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  if (tab.maximize(phase2, n) == Tableau::Outcome::unbounded) {
    sol.status = LpSolution::Status::unbounded;
    return sol;
  }
  sol.status = LpSolution::Status::optimal;
  sol.x = tab.solution(n);
  sol.value = tab.value(phase2);
  return sol;
}

void validate(const ResolutionData& data) {
  const auto rho = data.rank;
  if (rho == 0) throw InvalidResolutionData("rank must be positive");
  auto check_len = [rho](const RationalVector& v, const std::string& what) {
    if (v.size() != rho)
      throw InvalidResolutionData(what + " has " + std::to_string(v.size()) + " entries, rank is " + std::to_string(rho));
  };
  check_len(data.pi_H, "pi_H");
  check_len(data.psi_H, "psi_H");
  check_len(data.psi_prime_H, "psi_prime_H");
  for (std::size_t j = 0; j < data.effective_generators.size(); ++j)
    check_len(data.effective_generators[j], "effective generator " + std::to_string(j + 1));
  for (std::size_t i = 0; i < data.nef_functionals.size(); ++i)
    check_len(data.nef_functionals[i], "nef functional " + std::to_string(i + 1));
  if (!in_effective_cone(data, data.pi_H)) throw InvalidResolutionData("pi_H is not in the effective span");
  for (std::size_t i = 0; i < data.nef_functionals.size(); ++i)
    if (dot(data.nef_functionals[i], data.pi_H) < 0)
      throw InvalidResolutionData("nef functional " + std::to_string(i + 1) + " is negative on pi_H");
}

DivisorClass divisor_class_of_alpha(const ResolutionData& data, const Rational& alpha) {
  DivisorClass d(data.rank);
  for (std::size_t k = 0; k < data.rank; ++k) d[k] = data.psi_H[k] + data.psi_prime_H[k] - alpha * data.pi_H[k];
  return d;
}

bool in_effective_cone(const ResolutionData& data, const DivisorClass& d) {
  LinearProgram lp;
  const auto m = data.effective_generators.size();
  for (std::size_t k = 0; k < data.rank; ++k) {
    RationalVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = data.effective_generators[j][k];
    lp.rows.push_back(std::move(row));
  }
  lp.rhs = d;
  lp.objective.assign(m, Rational(0));
  return solve_exact(lp).status == LpSolution::Status::optimal;
}

bool is_nef_admissible(const ResolutionData& data, const DivisorClass& d) {
  for (const auto& f : data.nef_functionals)
    if (dot(f, d) < 0) return false;
  return true;
}

std::string AlphaResult::value_string() const {
  switch (kind) {
    case Kind::finite: return to_string(value);
    case Kind::plus_infinity: return "+inf";
    case Kind::minus_infinity: return "-inf";
  }
  return "?";
}

AlphaResult alpha_max_eff(const ResolutionData& data) {
  validate(data);
  // variables: λ_1..λ_m, α+, α-;  Σ λ_j g_j + (α+ - α-) pi_H = psi_H + psi_prime_H
  const auto m = data.effective_generators.size();
  LinearProgram lp;
  for (std::size_t k = 0; k < data.rank; ++k) {
    RationalVector row(m + 2);
    for (std::size_t j = 0; j < m; ++j) row[j] = data.effective_generators[j][k];
    row[m] = data.pi_H[k];
    row[m + 1] = -data.pi_H[k];
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(data.psi_H[k] + data.psi_prime_H[k]);
  }
  lp.objective.assign(m + 2, Rational(0));
  lp.objective[m] = 1;
  lp.objective[m + 1] = -1;

  const auto sol = solve_exact(lp);
  AlphaResult r;
  switch (sol.status) {
    case LpSolution::Status::infeasible:
      r.kind = AlphaResult::Kind::minus_infinity;
      break;
    case LpSolution::Status::unbounded:
      r.kind = AlphaResult::Kind::plus_infinity;
      break;
    case LpSolution::Status::optimal:
      r.kind = AlphaResult::Kind::finite;
      r.value = sol.value;
      r.combination.assign(sol.x.begin(), sol.x.begin() + static_cast<long>(m));
      break;
  }
  return r;
}

AlphaResult alpha_max_nef(const ResolutionData& data) {
  validate(data);
  DivisorClass u(data.rank);
  for (std::size_t k = 0; k < data.rank; ++k) u[k] = data.psi_H[k] + data.psi_prime_H[k];
  AlphaResult r;
  r.kind = AlphaResult::Kind::plus_infinity;
  for (std::size_t i = 0; i < data.nef_functionals.size(); ++i) {
    const Rational ui = dot(data.nef_functionals[i], u);
    const Rational vi = dot(data.nef_functionals[i], data.pi_H);
    if (vi == 0) {
      if (ui < 0) {
        AlphaResult none;
        none.kind = AlphaResult::Kind::minus_infinity;
        none.binding_functional = i;
        return none;
      }
      continue;
    }
    Rational bound = ui / vi;
    if (r.kind == AlphaResult::Kind::plus_infinity || bound < r.value) {
      r.kind = AlphaResult::Kind::finite;
      r.value = std::move(bound);
      r.binding_functional = i;
    }
  }
  return r;
}

bool verify_eff_certificate(const ResolutionData& data, const AlphaResult& result) {
  if (!result.is_finite()) return true;
  if (result.combination.size() != data.effective_generators.size()) return false;
  DivisorClass sum(data.rank, Rational(0));
  for (std::size_t j = 0; j < result.combination.size(); ++j) {
    if (result.combination[j] < 0) return false;
    for (std::size_t k = 0; k < data.rank; ++k) sum[k] += result.combination[j] * data.effective_generators[j][k];
  }
  return sum == divisor_class_of_alpha(data, result.value);
}

bool verify_nef_certificate(const ResolutionData& data, const AlphaResult& result) {
  if (!result.is_finite()) return true;
  if (!result.binding_functional || *result.binding_functional >= data.nef_functionals.size()) return false;
  const auto d = divisor_class_of_alpha(data, result.value);
  return dot(data.nef_functionals[*result.binding_functional], d) == 0 && is_nef_admissible(data, d);
}

NefBoundReport nef_bound_consistency(const ResolutionData& data, double delta, double delta_inv) {
  NefBoundReport report;
  report.nef = alpha_max_nef(data);
  report.bound = index_upper_bound(delta_one(delta, delta_inv));
  const bool exceeds = report.nef.kind == AlphaResult::Kind::plus_infinity ||
                       (report.nef.is_finite() && report.nef.value.get_d() > report.bound * (1 + 1e-12));
  if (exceeds) {
    report.consistent = false;
    report.warning = "alpha_max,nef = " + report.nef.value_string() + " exceeds delta1 + 1/delta1 = " +
                     std::to_string(report.bound) + "; data cannot come from a resolution of such a map";
  }
  return report;
}

}  // namespace arithdyn

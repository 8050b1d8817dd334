#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace arithdyn::oracle {

namespace {

double log_of(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

Rational eval_naive(const MultiPoly& p, const RationalVector& x) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

RationalVector apply_naive(const PolyMap& f, const RationalVector& x) {
  RationalVector out;
  for (const auto& c : f.components()) out.push_back(eval_naive(c, x));
  return out;
}

using Uni = std::vector<Rational>;

void trim(Uni& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Uni uni_mul(const Uni& a, const Uni& b) {
  if (a.empty() || b.empty()) return {};
  Uni out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

void uni_add(Uni& a, const Uni& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
}

// Row-reduces [columns | rhs]; returns the pivot count over the first k columns.
std::size_t reduce(std::vector<RationalVector>& rows, std::size_t k) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < rows[r].size(); ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<RationalVector> as_rows(const std::vector<RationalVector>& columns, std::size_t height) {
  std::vector<RationalVector> rows(height, RationalVector(columns.size(), Rational(0)));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < height; ++i) rows[i][j] = columns[j][i];
  return rows;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class Visit>
void for_each_subset(std::size_t n, std::size_t max_size, Visit visit) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (s.size() <= max_size) visit(s);
  }
}

}  // namespace

double naive_height(const RationalVector& p) {
  Integer b = 1;
  for (const auto& x : p) mpz_lcm(b.get_mpz_t(), b.get_mpz_t(), x.get_den_mpz_t());
  Integer m = b;
  for (const auto& x : p) {
    Integer a = x.get_num() * (b / x.get_den());
    if (abs(a) > m) m = abs(a);
  }
  return log_of(m);
}

unsigned long exhaustive_count(const AffineAutomorphism& f, const RationalVector& p, double bound, long m,
                               double escape) {
  const double limit = bound + 1e-9;
  unsigned long count = naive_height(p) <= limit ? 1 : 0;
  for (const auto* dir : {&f.forward(), &f.inverse()}) {
    RationalVector x = p;
    for (long n = 1; n <= m; ++n) {
      x = apply_naive(*dir, x);
      const double h = naive_height(x);
      count += h <= limit;
      if (h > escape) break;
    }
  }
  return count;
}

std::vector<unsigned> line_degrees(const PolyMap& f, unsigned n_max, std::mt19937& rng) {
  std::vector<Uni> x;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    Uni line{random_rational(rng, 50), random_rational(rng, 50)};
    if (line[1] == 0) line[1] = 1;
    x.push_back(line);
  }
  std::vector<unsigned> degrees;
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<Uni> next;
    for (const auto& comp : f.components()) {
      Uni acc;
      for (const auto& [mono, c] : comp.terms()) {
        Uni t{c};
        for (std::size_t i = 0; i < mono.dim(); ++i)
          for (std::uint32_t k = 0; k < mono[i]; ++k) t = uni_mul(t, x[i]);
        uni_add(acc, t);
      }
      next.push_back(acc);
    }
    x = std::move(next);
    std::size_t deg = 0;
    for (const auto& c : x)
      if (!c.empty()) deg = std::max(deg, c.size() - 1);
    degrees.push_back(static_cast<unsigned>(deg));
  }
  return degrees;
}

std::optional<std::size_t> pointwise_inverse_failure(const PolyMap& f, const PolyMap& g, std::mt19937& rng,
                                                     int trials) {
  for (int t = 0; t < trials; ++t) {
    RationalVector x;
    for (std::size_t i = 0; i < g.dim(); ++i) x.push_back(random_rational(rng, 30));
    const auto y = apply_naive(f, apply_naive(g, x));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (y[i] != x[i]) return i + 1;
  }
  return std::nullopt;
}

BinaryCoeffs binary_coeffs(const MultiPoly& form) {
  const unsigned n = form.degree().value();
  BinaryCoeffs c(n + 1, Rational(0));
  for (const auto& [m, v] : form.terms()) c[m[0]] = v;
  return c;
}

Rational homogeneous_resultant(const BinaryCoeffs& f, const BinaryCoeffs& g) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<RationalVector> rows(size, RationalVector(size, Rational(0)));
  // Descending powers of x: row r of f's block has f's top coefficient at column r.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) rows[r][r + i] = f[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) rows[n + r][r + i] = g[n - i];
  Rational det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t piv = col;
    while (piv < size && rows[piv][col] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != col) {
      std::swap(rows[piv], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < size; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  return det;
}

std::optional<BinaryCoeffs> exact_quotient(const BinaryCoeffs& f, const BinaryCoeffs& g) {
  if (f.size() < g.size()) return std::nullopt;
  const std::size_t qlen = f.size() - g.size() + 1;
  std::vector<RationalVector> columns;
  for (std::size_t j = 0; j < qlen; ++j) {
    RationalVector col(f.size(), Rational(0));
    for (std::size_t i = 0; i < g.size(); ++i) col[i + j] = g[i];
    columns.push_back(col);
  }
  return solve_independent(columns, f);
}

std::optional<RationalVector> solve_independent(const std::vector<RationalVector>& columns, const RationalVector& rhs) {
  const std::size_t k = columns.size();
  auto rows = as_rows(columns, rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rows[i].push_back(rhs[i]);
  if (reduce(rows, k) < k) return std::nullopt;
  for (std::size_t i = k; i < rows.size(); ++i)
    if (rows[i][k] != 0) return std::nullopt;
  RationalVector x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = rows[i][k] / rows[i][i];
  return x;
}

std::size_t rank_of(const std::vector<RationalVector>& columns) {
  if (columns.empty()) return 0;
  auto rows = as_rows(columns, columns.front().size());
  return reduce(rows, columns.size());
}

bool in_cone_by_subsets(const std::vector<RationalVector>& gens, const RationalVector& d) {
  if (std::all_of(d.begin(), d.end(), [](const Rational& v) { return v == 0; })) return true;
  bool found = false;
  for_each_subset(gens.size(), d.size(), [&](const std::vector<std::size_t>& s) {
    if (found || s.empty()) return;
    std::vector<RationalVector> cols;
    for (auto i : s) cols.push_back(gens[i]);
    if (rank_of(cols) != cols.size()) return;
    const auto x = solve_independent(cols, d);
    if (x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; })) found = true;
  });
  return found;
}

OracleAlpha eff_by_subsets(const ResolutionData& data) {
  RationalVector u(data.rank);
  RationalVector minus_pi(data.rank);
  for (std::size_t i = 0; i < data.rank; ++i) {
    u[i] = data.psi_H[i] + data.psi_prime_H[i];
    minus_pi[i] = -data.pi_H[i];
  }
  std::optional<Rational> best;
  for_each_subset(data.effective_generators.size(), data.rank, [&](const std::vector<std::size_t>& s) {
    std::vector<RationalVector> cols;
    for (auto i : s) cols.push_back(data.effective_generators[i]);
    for (int with_pi = 0; with_pi < 2; ++with_pi) {
      auto c = cols;
      if (with_pi) c.push_back(data.pi_H);
      if (c.empty()) {
        if (std::all_of(u.begin(), u.end(), [](const Rational& v) { return v == 0; }))
          best = best ? std::max(*best, Rational(0)) : Rational(0);
        continue;
      }
      if (rank_of(c) != c.size()) continue;
      const auto x = solve_independent(c, u);
      if (!x) continue;
      bool nonneg = true;
      for (std::size_t j = 0; j < cols.size(); ++j) nonneg = nonneg && (*x)[j] >= 0;
      if (!nonneg) continue;
      const Rational alpha = with_pi ? x->back() : Rational(0);
      if (!best || alpha > *best) best = alpha;
    }
  });
  OracleAlpha out;
  if (!best) return out;
  if (in_cone_by_subsets(data.effective_generators, minus_pi)) {
    out.kind = AlphaResult::Kind::plus_infinity;
    return out;
  }
  out.kind = AlphaResult::Kind::finite;
  out.value = *best;
  return out;
}

OracleAlpha nef_by_breakpoints(const ResolutionData& data) {
  RationalVector u(data.rank);
  for (std::size_t i = 0; i < data.rank; ++i) u[i] = data.psi_H[i] + data.psi_prime_H[i];
  auto feasible = [&](const Rational& alpha) {
    for (const auto& f : data.nef_functionals)
      if (dot(f, u) - alpha * dot(f, data.pi_H) < 0) return false;
    return true;
  };
  std::vector<Rational> candidates;
  for (const auto& f : data.nef_functionals) {
    const Rational v = dot(f, data.pi_H);
    if (v != 0) candidates.push_back(dot(f, u) / v);
  }
  OracleAlpha out;
  const Rational beyond = candidates.empty() ? Rational(0) : *std::max_element(candidates.begin(), candidates.end()) + 1;
  if (feasible(beyond)) {
    out.kind = AlphaResult::Kind::plus_infinity;
    return out;
  }
  for (const auto& c : candidates) {
    if (!feasible(c)) continue;
    if (out.kind != AlphaResult::Kind::finite || c > out.value) {
      out.kind = AlphaResult::Kind::finite;
      out.value = c;
    }
  }
  return out;
}

Rational random_rational(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace arithdyn::oracle

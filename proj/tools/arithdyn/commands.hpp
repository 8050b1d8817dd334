#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/catalog.hpp"
#include "arithdyn/degree_dynamics.hpp"
#include "arithdyn/height_inequality.hpp"
#include "arithdyn/orbit.hpp"

namespace arithdyn::cli {

enum ExitCode : int { kOk = 0, kExperimentFailure = 1, kUsageError = 2 };

struct GlobalOptions {
  std::optional<long> horizon;
  unsigned window = CountPolicy::kDefaultWindow;
  std::uint64_t bit_budget = SizeGuard::kDefaultBits;
  double band = 0.2;
  std::string out;

  CountPolicy policy() const;
  SizeGuard guard() const { return {bit_budget}; }
};

struct MapSource {
  std::string catalog_name;
  CatalogParams params;
  std::string file;

  AffineAutomorphism load() const;
};

/// "1, -3/2" -> point. Throws std::invalid_argument.
RationalPoint parse_point(const std::string& text);

/// A height bound: a decimal number or log(<rational>).
double parse_bound(const std::string& text);
/// Comma-separated bounds, strictly increasing.
std::vector<double> parse_schedule(const std::string& text);

/// Decimal with 12 significant digits.
std::string format_real(double v);

std::string orbit_csv(const AffineAutomorphism& f, const std::vector<OrbitSample>& samples);
std::string count_csv(const std::vector<OrbitCountResult>& rows);
std::string degree_csv(const DegreeSequence& seq);
std::string fit_alpha_csv(const AlphaFitResult& fit);

struct ReproRow {
  std::string label;
  std::string regressor;
  double measured = 0;
  std::string predicted_form;
  /// Empty for growth forms without a pinned constant; `ratio` is then
  /// measured against the self-consistency reference described in `note`.
  std::optional<double> predicted;
  double reference = 0;
  double ratio = 0;
  bool pass = false;
  std::string note;
};

struct ReproTable {
  std::string id;
  std::vector<ReproRow> rows;
  bool all_pass() const;
};

std::vector<std::string> reproduce_tables();

/// Throws std::invalid_argument for unknown tables.
ReproTable reproduce(const std::string& which, const GlobalOptions& options);
std::string repro_csv(const ReproTable& table);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arithdyn::cli

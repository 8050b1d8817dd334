#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "arithdyn/cone.hpp"
#include "arithdyn/enumerate.hpp"
#include "arithdyn/map_file.hpp"
#include "arithdyn/resolution_file.hpp"
#include "arithdyn/text_format.hpp"

namespace arithdyn::cli {

CountPolicy GlobalOptions::policy() const {
  CountPolicy p;
  p.window = window;
  p.horizon = horizon;
  p.guard = guard();
  return p;
}

AffineAutomorphism MapSource::load() const {
  if (!file.empty()) {
    if (!catalog_name.empty()) throw std::invalid_argument("--map and --map-file are mutually exclusive");
    if (!params.empty()) throw std::invalid_argument("--param only applies to catalog maps");
    return load_map_file(file);
  }
  if (catalog_name.empty()) throw std::invalid_argument("a map is required (--map NAME or --map-file PATH)");
  return catalog(catalog_name, params);
}

RationalPoint parse_point(const std::string& text) {
  auto p = parse_rational_list(text);
  if (p.empty()) throw std::invalid_argument("empty point");
  return p;
}

double parse_bound(const std::string& text) {
  const auto t = trim(text);
  if (t.starts_with("log(") && t.ends_with(")")) {
    const Rational q = parse_rational(std::string(t.substr(4, t.size() - 5)));
    if (q <= 0) throw std::invalid_argument("log of a non-positive number: " + std::string(t));
    return std::log(q.get_d());
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(std::string(t), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.size() || t.empty() || !std::isfinite(v))
    throw std::invalid_argument("not a height bound: '" + std::string(t) + "'");
  if (v < 0) throw std::invalid_argument("height bounds are non-negative");
  return v;
}

std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split_top_level(text, ',')) out.push_back(parse_bound(std::string(part)));
  if (out.empty()) throw std::invalid_argument("empty schedule");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) throw std::invalid_argument("schedule must be strictly increasing: '" + text + "'");
  return out;
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

namespace {

std::string join_point(const RationalPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::vector<std::string> names_for(const AffineAutomorphism& f) {
  return f.variables().empty() ? default_variable_names(f.dim()) : f.variables();
}

}  // namespace

std::string orbit_csv(const AffineAutomorphism& f, const std::vector<OrbitSample>& samples) {
  std::ostringstream os;
  os << "n";
  for (const auto& v : names_for(f)) os << ',' << v;
  os << ",height\n";
  for (const auto& s : samples) os << s.n << ',' << join_point(s.point) << ',' << format_real(s.height) << '\n';
  return os.str();
}

std::string count_csv(const std::vector<OrbitCountResult>& rows) {
  std::ostringstream os;
  os << "B,count,n_backward_max,n_forward_max,truncated_backward,truncated_forward\n";
  for (const auto& r : rows)
    os << format_real(r.bound) << ',' << r.count << ',' << r.n_backward_max << ',' << r.n_forward_max << ','
       << bool_str(r.truncated_backward) << ',' << bool_str(r.truncated_forward) << '\n';
  return os.str();
}

std::string degree_csv(const DegreeSequence& seq) {
  std::ostringstream os;
  os << "n,degree\n";
  for (const auto& [n, d] : seq.entries) os << n << ',' << d << '\n';
  return os.str();
}

std::string fit_alpha_csv(const AlphaFitResult& fit) {
  std::ostringstream os;
  os << "alpha,stratum,deficit,points,slope,stable\n";
  for (const auto& row : fit.rows) {
    const AlphaFitSummary* summary = nullptr;
    for (const auto& s : fit.summaries)
      if (s.alpha == row.alpha) summary = &s;
    os << format_real(row.alpha) << ',' << format_real(row.stratum) << ',' << format_real(row.deficit) << ','
       << row.points << ',' << (summary ? format_real(summary->slope) : "") << ','
       << (summary && summary->stable ? bool_str(*summary->stable) : "") << '\n';
  }
  return os.str();
}

namespace {

void add_map_options(CLI::App* cmd, MapSource& src, std::vector<std::string>& raw_params) {
  cmd->add_option("--map", src.catalog_name, "Catalog map name (see 'map list')");
  cmd->add_option("--param", raw_params, "Catalog parameter key=value (repeatable)");
  cmd->add_option("--map-file", src.file, "Map file with forward and inverse components");
}

CatalogParams to_params(const std::vector<std::string>& raw) {
  CatalogParams out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
    const auto key = std::string(trim(kv.substr(0, eq)));
    if (!out.emplace(key, std::string(trim(kv.substr(eq + 1)))).second)
      throw std::invalid_argument("duplicate --param '" + key + "'");
  }
  return out;
}

void check_point_dim(const AffineAutomorphism& f, const RationalPoint& p) {
  if (p.size() != f.dim())
    throw DimensionMismatch("point has " + std::to_string(p.size()) + " coordinates, map acts on dimension " +
                            std::to_string(f.dim()));
}

std::string cone_report(const ResolutionData& data, std::optional<double> delta, std::optional<double> delta_inv) {
  std::ostringstream os;
  const auto eff = alpha_max_eff(data);
  const auto nef = alpha_max_nef(data);
  os << "label: " << data.label << '\n';
  os << "rank: " << data.rank << '\n';
  os << "alpha_max_eff: " << eff.value_string() << '\n';
  if (eff.is_finite()) {
    os << "eff_certificate: [" << to_string(std::span<const Rational>(eff.combination)) << "]\n";
    os << "eff_certificate_verified: " << bool_str(verify_eff_certificate(data, eff)) << '\n';
  }
  os << "alpha_max_nef: " << nef.value_string() << '\n';
  if (nef.binding_functional) {
    os << "nef_binding_functional: " << *nef.binding_functional + 1 << '\n';
    os << "nef_certificate_verified: " << bool_str(verify_nef_certificate(data, nef)) << '\n';
  }
  if (delta && delta_inv) {
    const auto report = nef_bound_consistency(data, *delta, *delta_inv);
    os << "nef_upper_bound: " << format_real(report.bound) << '\n';
    os << "consistent: " << bool_str(report.consistent) << '\n';
    if (!report.warning.empty()) os << "warning: " << report.warning << '\n';
  }
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heights, orbit counts and degree dynamics of polynomial automorphisms over Q", "arithdyn"};
  app.require_subcommand(1);

  GlobalOptions g;
  long horizon = -1;
  app.add_option("--horizon", horizon, "Largest |n| scanned when counting orbits")->check(CLI::NonNegativeNumber);
  app.add_option("--window", g.window, "Stop a direction after this many consecutive heights above B")
      ->check(CLI::PositiveNumber);
  app.add_option("--bit-budget", g.bit_budget, "Largest numerator or denominator size in bits")
      ->check(CLI::PositiveNumber);
  app.add_option("--band", g.band, "Relative tolerance for reproduce rows")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "Write the result to this file instead of stdout");

  MapSource src;
  std::vector<std::string> raw_params;
  std::string point_text;
  std::string schedule_text;
  std::string text_a;
  std::string text_b;
  long from = 0;
  long to = 10;
  unsigned count_n = 6;
  bool flag = false;
  std::optional<double> opt_a;
  std::optional<double> opt_b;
  double tolerance = AlphaFitOptions{}.slope_tolerance;
  std::uint64_t cap = kDefaultEnumerationCap;

  auto* map_cmd = app.add_subcommand("map", "List, print or validate maps");
  std::string map_action;
  map_cmd->add_option("action", map_action, "list | show | validate")
      ->required()
      ->check(CLI::IsMember({"list", "show", "validate"}));
  add_map_options(map_cmd, src, raw_params);

  auto* iterate_cmd = app.add_subcommand("iterate", "Print phi^n(P) and heights for n in [from, to]");
  add_map_options(iterate_cmd, src, raw_params);
  iterate_cmd->add_option("--point", point_text, "Start point, e.g. \"1, 1/2\"")->required();
  iterate_cmd->add_option("--from", from, "First n (negative iterates the inverse)");
  iterate_cmd->add_option("--to", to, "Last n");

  auto* height_cmd = app.add_subcommand("height", "Weil height of a rational point");
  height_cmd->add_option("--point", point_text, "Point, e.g. \"1, 1/2\"")->required();

  auto* count_cmd = app.add_subcommand("count", "Count orbit points of height at most B");
  add_map_options(count_cmd, src, raw_params);
  count_cmd->add_option("--point", point_text, "Start point")->required();
  count_cmd->add_option("--B", schedule_text, "Bounds, e.g. \"8, 10, log(1000)\"")->required();
  count_cmd->add_flag("--exhaustive", flag, "Scan the full horizon in both directions");

  auto* periodic_cmd = app.add_subcommand("periodic", "Periodic points of height at most B");
  add_map_options(periodic_cmd, src, raw_params);
  periodic_cmd->add_option("--B", text_a, "Height bound")->required();
  periodic_cmd->add_option("--max-period", count_n, "Largest period searched")->check(CLI::PositiveNumber);
  periodic_cmd->add_option("--cap", cap, "Largest number of candidate points");

  auto* degseq_cmd = app.add_subcommand("degseq", "Degree sequence deg(phi^n)");
  add_map_options(degseq_cmd, src, raw_params);
  degseq_cmd->add_option("--n", count_n, "Largest n")->check(CLI::PositiveNumber);
  degseq_cmd->add_flag("--inverse", flag, "Iterate the inverse");

  auto* fit_cmd = app.add_subcommand("fit-alpha", "Empirical deficit of h(phi Q) + h(phi^-1 Q) >= alpha h(Q) - c");
  add_map_options(fit_cmd, src, raw_params);
  fit_cmd->add_option("--alpha", text_a, "Alpha values, e.g. \"2, 2.5, 3\"")->required();
  fit_cmd->add_option("--strata", text_b, "Height strata, e.g. \"1, 2, 3\"")->required();
  fit_cmd->add_option("--tolerance", tolerance, "Largest deficit slope counted as stable");
  fit_cmd->add_option("--cap", cap, "Largest number of candidate points");

  auto* cone_cmd = app.add_subcommand("cone", "Exact eff and nef indices from resolution data");
  cone_cmd->add_option("--file", text_a, "Resolution data file")->required();
  cone_cmd->add_option("--delta", opt_a, "Dynamical degree, for the nef consistency check");
  cone_cmd->add_option("--delta-inv", opt_b, "Inverse dynamical degree");

  auto* repro_cmd = app.add_subcommand("reproduce", "Re-run a table of measured versus predicted growth");
  std::string table;
  repro_cmd->add_option("table", table, "Table id")->required()->check(CLI::IsMember(reproduce_tables()));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (horizon >= 0) g.horizon = horizon;

  std::ostringstream result;
  int status = kOk;
  try {
    src.params = to_params(raw_params);
    if (*map_cmd) {
      if (map_action == "list") {
        for (const auto& e : catalog_entries()) {
          result << e.name << ": " << e.summary;
          if (!e.defaults.empty()) {
            result << " [";
            bool first = true;
            for (const auto& [k, v] : e.defaults) {
              result << (first ? "" : "; ") << k << '=' << v;
              first = false;
            }
            result << ']';
          }
          result << '\n';
        }
      } else if (map_action == "show") {
        result << print_map_file(to_map_file(src.load()));
      } else if (!src.file.empty()) {
        const auto data = parse_map_file(read_text_file(src.file));
        const auto report = validate(data.forward, data.inverse, g.guard());
        if (report.ok) {
          result << "ok\n";
        } else {
          result << "invalid: " << report.message << '\n';
          status = kExperimentFailure;
        }
      } else {
        const auto f = src.load();
        const auto report = validate(f);
        result << (report.ok ? "ok\n" : "invalid: " + report.message + "\n");
        if (!report.ok) status = kExperimentFailure;
      }
    } else if (*iterate_cmd) {
      const auto f = src.load();
      const auto p = parse_point(point_text);
      check_point_dim(f, p);
      if (from > to) throw std::invalid_argument("--from must not exceed --to");
      result << orbit_csv(f, orbit_samples(f, p, from, to, g.guard()));
    } else if (*height_cmd) {
      const auto p = parse_point(point_text);
      result << "size,height\n" << height_size(p).get_str() << ',' << format_real(weil_height(p)) << '\n';
    } else if (*count_cmd) {
      const auto f = src.load();
      const auto p = parse_point(point_text);
      check_point_dim(f, p);
      auto policy = g.policy();
      if (flag) {
        if (!g.horizon) throw std::invalid_argument("--exhaustive requires --horizon");
        policy.window.reset();
      }
      result << count_csv(count_orbit_schedule(f, p, parse_schedule(schedule_text), policy));
    } else if (*periodic_cmd) {
      const auto f = src.load();
      const auto points = find_periodic_points(f, parse_bound(text_a), count_n, g.guard(), cap);
      result << "period";
      for (const auto& v : names_for(f)) result << ',' << v;
      result << '\n';
      for (const auto& pp : points) result << pp.period << ',' << join_point(pp.point) << '\n';
    } else if (*degseq_cmd) {
      const auto f = src.load();
      const auto seq = degree_sequence(f, count_n, g.guard(), flag ? Direction::inverse : Direction::forward);
      result << degree_csv(seq);
      const auto est = dyn_degree_estimate(seq);
      err << "dynamical degree <= " << format_real(est.upper_bound) << " (from n = " << est.at_n << ")\n";
      if (seq.truncated) err << "warning: size budget reached; sequence truncated\n";
    } else if (*fit_cmd) {
      const auto f = src.load();
      AlphaFitOptions options;
      options.slope_tolerance = tolerance;
      options.guard = g.guard();
      options.enumeration_cap = cap;
      result << fit_alpha_csv(fit_alpha(f, parse_schedule(text_a), parse_schedule(text_b), options));
    } else if (*cone_cmd) {
      if (opt_a.has_value() != opt_b.has_value())
        throw std::invalid_argument("--delta and --delta-inv go together");
      result << cone_report(load_resolution_file(text_a), opt_a, opt_b);
    } else if (*repro_cmd) {
      const auto t = reproduce(table, g);
      result << repro_csv(t);
      std::size_t passed = 0;
      for (const auto& r : t.rows) passed += r.pass;
      err << "reproduce " << t.id << ": " << passed << "/" << t.rows.size() << " rows pass\n";
      if (!t.all_pass()) status = kExperimentFailure;
    }
  } catch (const PeriodicPointError& e) {
    err << "error: " << e.what() << '\n';
    return kExperimentFailure;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExperimentFailure;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExperimentFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (g.out.empty()) {
    out << result.str();
  } else {
    std::ofstream file(g.out, std::ios::binary);
    file << result.str();
    if (!file) {
      err << "error: cannot write '" << g.out << "'\n";
      return kUsageError;
    }
  }
  return status;
}

}  // namespace arithdyn::cli

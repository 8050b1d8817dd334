#include "arithdyn/map_file.hpp"

#include "arithdyn/poly_parser.hpp"
#include "arithdyn/text_format.hpp"

namespace arithdyn {

namespace {

const KeyValueEntry& require(const std::map<std::string, KeyValueEntry>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw FormatError(0, "missing key '" + key + "'");
  return it->second;
}

PolyMap parse_components(const KeyValueEntry& e, const std::vector<std::string>& vars, const char* key) {
  std::vector<std::string> items;
  try {
    items = parse_bracket_list(e.value);
  } catch (const std::invalid_argument& ex) {
    throw FormatError(e.line, ex.what());
  }
  if (items.size() != vars.size())
    throw FormatError(e.line, std::string(key) + " has " + std::to_string(items.size()) + " components, expected " +
                                  std::to_string(vars.size()));
  std::vector<MultiPoly> comps;
  for (const auto& item : items) {
    try {
      comps.push_back(parse_poly(item, vars));
    } catch (const PolyParseError& ex) {
      throw FormatError(e.line, std::string(key) + ": '" + item + "': " + ex.what());
    }
  }
  return PolyMap(std::move(comps));
}

std::string print_components(const PolyMap& m, const std::vector<std::string>& vars) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(m[i], vars);
  }
  return out + "]";
}

}  // namespace

MapFileData parse_map_file(std::string_view text) {
  const auto kv = parse_key_values(text);
  for (const auto& [k, e] : kv)
    if (k != "name" && k != "dim" && k != "vars" && k != "forward" && k != "inverse")
      throw FormatError(e.line, "unknown key '" + k + "'");

  MapFileData data;
  if (auto it = kv.find("name"); it != kv.end()) data.name = it->second.value;

  const auto& dim_entry = require(kv, "dim");
  std::size_t dim = 0;
  try {
    const auto q = parse_rational(dim_entry.value);
    if (q.get_den() != 1 || q < 1) throw std::invalid_argument("dim must be a positive integer");
    dim = q.get_num().get_ui();
  } catch (const std::invalid_argument& ex) {
    throw FormatError(dim_entry.line, ex.what());
  }

  const auto& vars_entry = require(kv, "vars");
  try {
    data.vars = parse_bracket_list(vars_entry.value);
  } catch (const std::invalid_argument& ex) {
    throw FormatError(vars_entry.line, ex.what());
  }
  if (data.vars.size() != dim)
    throw FormatError(vars_entry.line, "vars lists " + std::to_string(data.vars.size()) + " names, dim is " +
                                           std::to_string(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (data.vars[i] == data.vars[j]) throw FormatError(vars_entry.line, "duplicate variable '" + data.vars[i] + "'");

  data.forward = parse_components(require(kv, "forward"), data.vars, "forward");
  data.inverse = parse_components(require(kv, "inverse"), data.vars, "inverse");
  return data;
}

std::string print_map_file(const MapFileData& data) {
  std::string out;
  out += "name: " + data.name + "\n";
  out += "dim: " + std::to_string(data.vars.size()) + "\n";
  out += "vars: [";
  for (std::size_t i = 0; i < data.vars.size(); ++i) out += (i ? ", " : "") + data.vars[i];
  out += "]\n";
  out += "forward: " + print_components(data.forward, data.vars) + "\n";
  out += "inverse: " + print_components(data.inverse, data.vars) + "\n";
  return out;
}

MapFileData to_map_file(const AffineAutomorphism& f) {
  return {f.name(), f.variables(), f.forward(), f.inverse()};
}

AffineAutomorphism to_automorphism(const MapFileData& data) {
  return AffineAutomorphism(data.forward, data.inverse, data.name, {}, data.vars);
}

AffineAutomorphism load_map_file(const std::string& path) {
  return to_automorphism(parse_map_file(read_text_file(path)));
}

}  // namespace arithdyn

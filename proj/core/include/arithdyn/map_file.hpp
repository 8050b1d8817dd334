#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arithdyn/automorphism.hpp"

namespace arithdyn {

/// Text map file:
///
///   name: henon
///   dim: 2
///   vars: [x, y]
///   forward: [y, y^2 + x + 1]
///   inverse: [-x^2 + y - 1, x]
///
/// Printing emits keys in this order with canonical polynomial text, so
/// print(parse(print(m))) == print(m) byte for byte.
struct MapFileData {
  std::string name;
  std::vector<std::string> vars;
  PolyMap forward{std::vector<MultiPoly>{}};
  PolyMap inverse{std::vector<MultiPoly>{}};
};

/// Throws FormatError (with line number) on malformed input.
MapFileData parse_map_file(std::string_view text);
std::string print_map_file(const MapFileData& data);

MapFileData to_map_file(const AffineAutomorphism& f);

/// Validates the composition identity; throws InvalidAutomorphism.
AffineAutomorphism to_automorphism(const MapFileData& data);

AffineAutomorphism load_map_file(const std::string& path);

}  // namespace arithdyn

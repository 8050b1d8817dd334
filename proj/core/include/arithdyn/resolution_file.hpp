#pragma once

#include <string>
#include <string_view>

#include "arithdyn/cone.hpp"

namespace arithdyn {

/// Resolution-data file:
///
///   label: synthetic-rank2
///   rank: 2
///   pi_H: [1, 0]
///   psi_H: [2, 1/2]
///   psi_prime_H: [1, 1/2]
///   effective_generators: [[1, 0], [0, 1]]
///   nef_functionals: [[1, 0], [0, 1]]
///
/// Parsing checks shapes and runs validate(); errors carry the line number.
ResolutionData parse_resolution_file(std::string_view text);
std::string print_resolution_file(const ResolutionData& data);
ResolutionData load_resolution_file(const std::string& path);

}  // namespace arithdyn

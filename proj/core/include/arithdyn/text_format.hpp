#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Small helpers shared by the map-file and resolution-file readers.
//
// Both formats are line oriented `key: value` files. `#` starts a comment.
// List values are bracketed, comma separated, and may nest one level:
//   vars: [x, y]
//   effective_generators: [[1, 0], [0, 1]]

namespace arithdyn {

std::string_view trim(std::string_view s);

/// Splits on `sep` at bracket/parenthesis depth zero. Parts are trimmed.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct KeyValueEntry {
  std::string value;
  std::size_t line = 0;
};

/// Parses the key/value layer. Duplicate keys are an error.
std::map<std::string, KeyValueEntry> parse_key_values(std::string_view text);

/// "[a, b, c]" -> {"a", "b", "c"}. "[]" -> {}.
std::vector<std::string> parse_bracket_list(std::string_view s);

std::string read_text_file(const std::string& path);

}  // namespace arithdyn

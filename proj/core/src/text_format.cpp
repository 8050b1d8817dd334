#include "arithdyn/text_format.hpp"

#include <fstream>
#include <sstream>

namespace arithdyn {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[' || c == '(') ++depth;
    else if (c == ']' || c == ')') --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::map<std::string, KeyValueEntry> parse_key_values(std::string_view text) {
  std::map<std::string, KeyValueEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw FormatError(line_no, "expected 'key: value'");
    std::string key(trim(line.substr(0, colon)));
    if (key.empty()) throw FormatError(line_no, "empty key");
    if (out.count(key)) throw FormatError(line_no, "duplicate key '" + key + "'");
    out.emplace(key, KeyValueEntry{std::string(trim(line.substr(colon + 1))), line_no});
  }
  return out;
}

std::vector<std::string> parse_bracket_list(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("expected bracketed list, got '" + std::string(s) + "'");
  const auto inner = trim(s.substr(1, s.size() - 2));
  std::vector<std::string> out;
  if (inner.empty()) return out;
  for (auto part : split_top_level(inner, ',')) {
    if (part.empty()) throw std::invalid_argument("empty list element in '" + std::string(s) + "'");
    out.emplace_back(part);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace arithdyn

#include "arithdyn/resolution_file.hpp"

#include "arithdyn/text_format.hpp"

namespace arithdyn {

namespace {

RationalVector parse_vector(const KeyValueEntry& e) {
  RationalVector v;
  try {
    for (const auto& item : parse_bracket_list(e.value)) v.push_back(parse_rational(item));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(e.line, ex.what());
  }
  return v;
}

std::vector<RationalVector> parse_vector_list(const KeyValueEntry& e) {
  std::vector<RationalVector> out;
  try {
    for (const auto& item : parse_bracket_list(e.value)) out.push_back(parse_vector({item, e.line}));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(e.line, ex.what());
  }
  return out;
}

std::string print_vector(const RationalVector& v) { return "[" + to_string(std::span<const Rational>(v)) + "]"; }

std::string print_vector_list(const std::vector<RationalVector>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + print_vector(vs[i]);
  return out + "]";
}

}  // namespace

ResolutionData parse_resolution_file(std::string_view text) {
  const auto kv = parse_key_values(text);
  static const char* known[] = {"label", "rank", "pi_H", "psi_H", "psi_prime_H", "effective_generators",
                                "nef_functionals"};
  for (const auto& [k, e] : kv) {
    bool ok = false;
    for (const auto* name : known) ok = ok || k == name;
    if (!ok) throw FormatError(e.line, "unknown key '" + k + "'");
  }
  auto get = [&](const char* key) -> const KeyValueEntry& {
    auto it = kv.find(key);
    if (it == kv.end()) throw FormatError(0, std::string("missing key '") + key + "'");
    return it->second;
  };

  ResolutionData data;
  if (auto it = kv.find("label"); it != kv.end()) data.label = it->second.value;
  const auto& rank = get("rank");
  try {
    const auto q = parse_rational(rank.value);
    if (q.get_den() != 1 || q < 1) throw std::invalid_argument("rank must be a positive integer");
    data.rank = q.get_num().get_ui();
  } catch (const std::invalid_argument& ex) {
    throw FormatError(rank.line, ex.what());
  }
  data.pi_H = parse_vector(get("pi_H"));
  data.psi_H = parse_vector(get("psi_H"));
  data.psi_prime_H = parse_vector(get("psi_prime_H"));
  data.effective_generators = kv.count("effective_generators") ? parse_vector_list(get("effective_generators"))
                                                                : std::vector<RationalVector>{};
  data.nef_functionals =
      kv.count("nef_functionals") ? parse_vector_list(get("nef_functionals")) : std::vector<RationalVector>{};

  try {
    validate(data);
  } catch (const InvalidResolutionData& ex) {
    // point at the line most likely responsible
    std::size_t line = 0;
    const std::string msg = ex.what();
    for (const auto* key : known)
      if (msg.find(key) != std::string::npos && kv.count(key)) line = kv.at(key).line;
    if (!line && msg.find("effective generator") != std::string::npos && kv.count("effective_generators"))
      line = kv.at("effective_generators").line;
    if (!line && msg.find("nef functional") != std::string::npos && kv.count("nef_functionals"))
      line = kv.at("nef_functionals").line;
    throw FormatError(line, msg);
  }
  return data;
}

std::string print_resolution_file(const ResolutionData& data) {
  std::string out;
  out += "label: " + data.label + "\n";
  out += "rank: " + std::to_string(data.rank) + "\n";
  out += "pi_H: " + print_vector(data.pi_H) + "\n";
  out += "psi_H: " + print_vector(data.psi_H) + "\n";
  out += "psi_prime_H: " + print_vector(data.psi_prime_H) + "\n";
  out += "effective_generators: " + print_vector_list(data.effective_generators) + "\n";
  out += "nef_functionals: " + print_vector_list(data.nef_functionals) + "\n";
  return out;
}

ResolutionData load_resolution_file(const std::string& path) { return parse_resolution_file(read_text_file(path)); }

}  // namespace arithdyn

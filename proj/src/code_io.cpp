#include <algorithm>
#include <set>

#include "json.hpp"
#include "nc/core.hpp"

namespace nc {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  // Commas inside {...} belong to a multi-label codeword.
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '{') ++depth;
    if (text[i] == '}') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(text.substr(start)));
  return parts;
}

}  // namespace

Code parse_code(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() > 1 && t.front() == '{') {
    const auto next = t.find_first_not_of(" \t\r\n", 1);
    if (next != std::string_view::npos && t[next] == '"') return parse_code_json(t);
  }
  return parse_code_text(t);
}

Code parse_code_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("neurons") || !j.contains("codewords")) {
    throw Error(ErrorKind::Parse, "code JSON needs \"neurons\" and \"codewords\"");
  }
  try {
    NeuronUniverse universe(j.at("neurons").get<std::vector<std::string>>());
    std::vector<Codeword> words;
    for (const auto& cw : j.at("codewords")) {
      const auto labels = cw.get<std::vector<std::string>>();
      Codeword c;
      for (const auto& l : labels) {
        const auto i = universe.index_of(l);
        if (c.contains(i)) throw Error(ErrorKind::Parse, "repeated neuron '" + l + "' in a codeword");
        c = c.with(i);
      }
      words.push_back(c);
    }
    return Code(std::move(universe), std::move(words));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Code parse_code_text(std::string_view text, const NeuronUniverse* universe) {
  const std::string_view t = trim(text);
  if (t.empty()) throw Error(ErrorKind::Parse, "empty code text (write {} for the code containing only the empty word)");
  const auto parts = split_top_level(t);

  NeuronUniverse inferred;
  if (universe == nullptr) {
    std::set<char> chars;
    for (auto p : parts) {
      if (p == "{}") continue;
      if (p.find_first_of("{}, \t") != std::string_view::npos) {
        throw Error(ErrorKind::Parse, "compact text needs single-character labels; use the JSON format");
      }
      chars.insert(p.begin(), p.end());
    }
    std::vector<std::string> labels;
    for (char ch : chars) labels.emplace_back(1, ch);
    inferred = NeuronUniverse(std::move(labels));
    universe = &inferred;
  }

  std::vector<Codeword> words;
  for (auto p : parts) {
    if (p.empty()) throw Error(ErrorKind::Parse, "empty codeword entry (write {} for the empty word)");
    words.push_back(parse_codeword(*universe, p));
  }
  return Code(*universe, std::move(words));
}

std::string serialize_code_json(const Code& c) {
  nlohmann::ordered_json j;
  j["neurons"] = c.universe().labels();
  auto words = nlohmann::ordered_json::array();
  for (const auto& w : c.codewords()) words.push_back(labels_of(c.universe(), w));
  j["codewords"] = std::move(words);
  return j.dump();
}

std::string serialize_code_text(const Code& c) {
  if (!c.universe().single_char_labels()) {
    throw Error(ErrorKind::InvalidParameter, "compact text format requires single-character labels");
  }
  return format_codeword_list(c.universe(), c.codewords(), ",");
}

}  // namespace nc

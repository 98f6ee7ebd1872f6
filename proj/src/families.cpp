#include "nc/families.hpp"

#include <charconv>
#include <set>

#include "embedded_data.inc"
#include "json.hpp"

namespace nc {

namespace {

constexpr int kMaxPrismDimension = 20;

std::vector<std::string> numbered_labels(int first, int last, std::string_view suffix = "") {
  std::vector<std::string> labels;
  for (int i = first; i <= last; ++i) labels.push_back(std::to_string(i) + std::string(suffix));
  return labels;
}

}  // namespace

Code gen_Ln(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "L_n needs n >= 0, got " + std::to_string(n));
  if (n + 6 > static_cast<int>(kMaxNeurons)) {
    throw Error(ErrorKind::UniverseTooLarge, "L_n with n = " + std::to_string(n) + " needs more than 64 neurons");
  }
  NeuronUniverse universe(numbered_labels(1, n + 6));
  // Neuron k lives at bit k-1.
  auto word = [](std::initializer_list<int> neurons) {
    Codeword c;
    for (int k : neurons) c = c.with(static_cast<std::size_t>(k - 1));
    return c;
  };
  std::vector<Codeword> words{word({}),     word({1}),    word({2}),       word({3}),
                              word({1, 2, 3}), word({1, 4, 5}), word({4, 5}), word({2, 4, 5, 6})};
  for (int k = 6; k <= n + 6; ++k) words.push_back(word({4, k}));
  for (int k = 6; k <= n + 5; ++k) words.push_back(word({4, k, k + 1}));
  words.push_back(word({3, 4, n + 6}));
  return Code(std::move(universe), std::move(words));
}

Code gen_Pd(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidParameter, "P_d needs d >= 1, got " + std::to_string(d));
  if (d > kMaxPrismDimension) {
    throw Error(ErrorKind::InvalidParameter, "P_d is limited to d <= " + std::to_string(kMaxPrismDimension));
  }
  auto labels = numbered_labels(1, d + 1);
  for (auto& l : numbered_labels(1, d + 2, "bar")) labels.push_back(std::move(l));
  NeuronUniverse universe(std::move(labels));

  const auto plain = static_cast<std::size_t>(d + 1);
  const std::uint64_t plain_mask = (std::uint64_t{1} << plain) - 1;
  auto bar = [&](std::size_t i) { return plain + i; };  // bit of (i+1)bar

  std::set<std::uint64_t> seen;
  std::vector<Codeword> words;
  auto add = [&](std::uint64_t bits) {
    if (seen.insert(bits).second) words.emplace_back(bits);
  };
  for (std::size_t i = 0; i < plain; ++i) {
    const std::uint64_t ground = (plain_mask & ~(std::uint64_t{1} << i)) | (std::uint64_t{1} << bar(i));
    // Every submask of ground, including the empty one.
    for (std::uint64_t s = ground;; s = (s - 1) & ground) {
      add(s);
      if (s == 0) break;
    }
  }
  std::uint64_t petals = 0;
  for (std::size_t i = 0; i < plain + 1; ++i) petals |= std::uint64_t{1} << bar(i);
  add(petals);
  return Code(std::move(universe), std::move(words));
}

Code generate(const FamilyParam& p) {
  return p.family == Family::Ln ? gen_Ln(p.parameter) : gen_Pd(p.parameter);
}

namespace {

const nlohmann::json& registry_document() {
  static const nlohmann::json doc = nlohmann::json::parse(data::kRegistryJson);
  return doc;
}

std::vector<CitedFact> read_facts(const nlohmann::json& arr) {
  std::vector<CitedFact> facts;
  for (const auto& f : arr) {
    facts.push_back({f.at("fact").get<std::string>(), f.at("value").get<std::string>(),
                     f.at("source").get<std::string>()});
  }
  return facts;
}

int parse_parameter(std::string_view text, std::string_view name) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw Error(ErrorKind::UnknownCode, std::string(name));
  return value;
}

}  // namespace

RegistryEntry registry(std::string_view name) {
  const auto& doc = registry_document();
  if (name.starts_with("Ln:") || name.starts_with("Pd:")) {
    const bool ln = name.starts_with("Ln:");
    const int p = parse_parameter(name.substr(3), name);
    return {std::string(name), ln ? gen_Ln(p) : gen_Pd(p),
            read_facts(doc.at("families").at(ln ? "Ln" : "Pd"))};
  }
  for (const auto& entry : doc.at("codes")) {
    if (entry.at("name").get<std::string_view>() != name) continue;
    NeuronUniverse universe(entry.at("neurons").get<std::vector<std::string>>());
    std::vector<Codeword> words;
    for (const auto& w : entry.at("codewords")) words.push_back(parse_codeword(universe, w.get<std::string>()));
    return {std::string(name), Code(std::move(universe), std::move(words)), read_facts(entry.at("metadata"))};
  }
  throw Error(ErrorKind::UnknownCode, "'" + std::string(name) + "'");
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& entry : registry_document().at("codes")) names.push_back(entry.at("name").get<std::string>());
  return names;
}

}  // namespace nc

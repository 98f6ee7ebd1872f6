#include "nc/core.hpp"

#include <algorithm>
#include <set>

#include "nc/kernels.hpp"

namespace nc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateCodeword: return "DuplicateCodeword";
    case ErrorKind::UnknownNeuron: return "UnknownNeuron";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::UnknownCode: return "UnknownCode";
    case ErrorKind::UnknownCodeword: return "UnknownCodeword";
    case ErrorKind::NotAWalk: return "NotAWalk";
    case ErrorKind::InfeasibleWalk: return "InfeasibleWalk";
    case ErrorKind::NoFeasiblePath: return "NoFeasiblePath";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::RealizationMalformed: return "RealizationMalformed";
    case ErrorKind::CertificateMalformed: return "CertificateMalformed";
  }
  return "Error";
}

// ---- NeuronUniverse -----------------------------------------------------------

NeuronUniverse::NeuronUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxNeurons) {
    throw Error(ErrorKind::UniverseTooLarge,
                std::to_string(labels_.size()) + " neurons exceed the limit of " + std::to_string(kMaxNeurons));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw Error(ErrorKind::Parse, "empty neuron label");
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::Parse, "duplicate neuron label '" + labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> NeuronUniverse::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t NeuronUniverse::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownNeuron, "'" + std::string(label) + "'");
}

bool NeuronUniverse::single_char_labels() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
}

std::uint64_t NeuronUniverse::full_mask() const noexcept {
  return labels_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << labels_.size()) - 1;
}

// ---- Codeword -------------------------------------------------------------------

std::vector<std::size_t> Codeword::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

// ---- Code -------------------------------------------------------------------------

Code::Code(NeuronUniverse universe, std::vector<Codeword> words)
    : universe_(std::move(universe)), words_(std::move(words)) {
  const std::uint64_t outside = ~universe_.full_mask();
  for (const auto& w : words_) {
    if ((w.bits() & outside) != 0) {
      throw Error(ErrorKind::UnknownNeuron, "codeword uses a neuron outside the universe");
    }
  }
  std::sort(words_.begin(), words_.end(), canonical_less);
  for (std::size_t i = 1; i < words_.size(); ++i) {
    if (words_[i] == words_[i - 1]) {
      throw Error(ErrorKind::DuplicateCodeword, format_codeword(universe_, words_[i]));
    }
  }
  bits_.reserve(words_.size());
  for (const auto& w : words_) bits_.push_back(w.bits());
  sorted_bits_ = bits_;
  std::sort(sorted_bits_.begin(), sorted_bits_.end());
}

bool Code::contains(Codeword c) const {
  return std::binary_search(sorted_bits_.begin(), sorted_bits_.end(), c.bits());
}

std::optional<std::size_t> Code::index_of(Codeword c) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), c, canonical_less);
  if (it == words_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t Code::require_index(Codeword c) const {
  if (auto i = index_of(c)) return *i;
  throw Error(ErrorKind::UnknownCodeword, format_codeword(universe_, c) + " is not a codeword");
}

bool Code::same_as(const Code& other) const {
  if (universe_.size() != other.universe_.size() || words_.size() != other.words_.size()) return false;
  // Translate other's bit positions into ours.
  std::vector<std::size_t> to_mine(other.universe_.size());
  for (std::size_t j = 0; j < other.universe_.size(); ++j) {
    auto i = universe_.find(other.universe_.label(j));
    if (!i) return false;
    to_mine[j] = *i;
  }
  for (const auto& w : other.words_) {
    std::uint64_t mapped = 0;
    for (auto j : w.members()) mapped |= std::uint64_t{1} << to_mine[j];
    if (!contains(Codeword(mapped))) return false;
  }
  return true;
}

// ---- labels <-> codewords -----------------------------------------------------------

Codeword codeword_from_labels(const NeuronUniverse& u, std::span<const std::string> labels) {
  Codeword c;
  for (const auto& l : labels) c = c.with(u.index_of(l));
  return c;
}

std::vector<std::string> labels_of(const NeuronUniverse& u, Codeword c) {
  std::vector<std::string> out;
  for (auto i : c.members()) out.push_back(u.label(i));
  return out;
}

std::string format_codeword(const NeuronUniverse& u, Codeword c) {
  if (c.empty()) return "{}";
  std::string out;
  if (u.single_char_labels()) {
    for (auto i : c.members()) out += u.label(i);
    return out;
  }
  out = "{";
  bool first = true;
  for (auto i : c.members()) {
    if (!first) out += ',';
    out += u.label(i);
    first = false;
  }
  return out + "}";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Codeword parse_codeword(const NeuronUniverse& u, std::string_view token) {
  std::string_view t = trim(token);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = trim(t.substr(1, t.size() - 2));
  if (t.empty()) return Codeword{};
  if (u.find(t)) return Codeword{}.with(*u.find(t));

  Codeword c;
  if (t.find_first_of(", \t") != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < t.size()) {
      const auto end = t.find_first_of(", \t", pos);
      const auto piece = t.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      if (!piece.empty()) c = c.with(u.index_of(piece));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    return c;
  }
  if (!u.single_char_labels()) {
    throw Error(ErrorKind::UnknownNeuron,
                "'" + std::string(t) + "' (multi-character labels must be separated by commas)");
  }
  for (char ch : t) {
    const auto i = u.index_of(std::string_view(&ch, 1));
    if (c.contains(i)) throw Error(ErrorKind::Parse, "repeated neuron in '" + std::string(t) + "'");
    c = c.with(i);
  }
  return c;
}

std::vector<Codeword> parse_codeword_list(const NeuronUniverse& u, std::string_view text) {
  std::vector<Codeword> out;
  std::size_t pos = 0;
  const std::string_view t = trim(text);
  if (t.empty()) return out;
  while (true) {
    const auto end = t.find(';', pos);
    out.push_back(parse_codeword(u, t.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string format_codeword_list(const NeuronUniverse& u, std::span<const Codeword> words, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += format_codeword(u, words[i]);
  }
  return out;
}

// ---- predicates ------------------------------------------------------------------------

std::vector<Codeword> maximal_codewords(const Code& c) {
  std::vector<Codeword> out;
  std::vector<std::uint8_t> above(c.size());
  for (const auto& w : c.codewords()) {
    kernels::superset_flags(c.bits(), w.bits(), above);
    // w itself is the only superset when it is maximal.
    if (std::count(above.begin(), above.end(), std::uint8_t{1}) == 1) out.push_back(w);
  }
  return out;
}

bool is_intersection_complete(const Code& c) {
  const auto words = c.codewords();
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      if (!c.contains(words[a] & words[b])) return false;
    }
  }
  return true;
}

bool is_sunflower_code(const Code& c) {
  const Codeword everything(c.universe().full_mask());
  if (!c.contains(everything)) return false;
  return std::all_of(c.codewords().begin(), c.codewords().end(),
                     [&](Codeword w) { return w == everything || w.size() <= 1; });
}

Code project(const Code& c, std::uint64_t keep) {
  keep &= c.universe().full_mask();
  std::vector<std::string> labels;
  std::vector<std::size_t> new_index(c.universe().size(), 0);
  for (std::size_t i = 0; i < c.universe().size(); ++i) {
    if ((keep >> i) & 1U) {
      new_index[i] = labels.size();
      labels.push_back(c.universe().label(i));
    }
  }
  std::set<std::uint64_t> seen;
  std::vector<Codeword> words;
  for (const auto& w : c.codewords()) {
    std::uint64_t mapped = 0;
    for (auto i : (w & Codeword(keep)).members()) mapped |= std::uint64_t{1} << new_index[i];
    if (seen.insert(mapped).second) words.emplace_back(mapped);
  }
  return Code(NeuronUniverse(std::move(labels)), std::move(words));
}

Code project_labels(const Code& c, std::span<const std::string> keep) {
  return project(c, codeword_from_labels(c.universe(), keep).bits());
}

}  // namespace nc

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nc/errors.hpp"

namespace nc {

inline constexpr std::size_t kMaxNeurons = 64;

/// Ordered list of distinct neuron labels. Index i is the bit position
/// used by every Codeword over this universe.
class NeuronUniverse {
 public:
  NeuronUniverse() = default;
  explicit NeuronUniverse(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownNeuron.
  std::size_t index_of(std::string_view label) const;

  bool single_char_labels() const noexcept;
  std::uint64_t full_mask() const noexcept;

  bool operator==(const NeuronUniverse& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// A set of neuron indices, stored as one machine word.
class Codeword {
 public:
  constexpr Codeword() = default;
  constexpr explicit Codeword(std::uint64_t bits) : bits_(bits) {}

  static Codeword of(std::initializer_list<std::size_t> neurons) {
    std::uint64_t bits = 0;
    for (auto i : neurons) bits |= std::uint64_t{1} << i;
    return Codeword(bits);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(std::size_t neuron) const noexcept { return (bits_ >> neuron) & 1U; }

  constexpr Codeword with(std::size_t neuron) const noexcept { return Codeword(bits_ | (std::uint64_t{1} << neuron)); }
  constexpr Codeword without(std::size_t neuron) const noexcept { return Codeword(bits_ & ~(std::uint64_t{1} << neuron)); }

  constexpr bool is_subset_of(Codeword other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_strict_subset_of(Codeword other) const noexcept {
    return bits_ != other.bits_ && is_subset_of(other);
  }

  std::vector<std::size_t> members() const;

  friend constexpr Codeword operator&(Codeword a, Codeword b) noexcept { return Codeword(a.bits_ & b.bits_); }
  friend constexpr Codeword operator|(Codeword a, Codeword b) noexcept { return Codeword(a.bits_ | b.bits_); }
  friend constexpr bool operator==(Codeword a, Codeword b) noexcept = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Cardinality first, then lexicographic on the sorted index lists.
constexpr bool canonical_less(Codeword a, Codeword b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // The set holding the lowest differing index has the smaller sorted list.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

/// An immutable set of distinct codewords over a universe, iterated in
/// canonical order.
class Code {
 public:
  Code() = default;
  /// Throws DuplicateCodeword, or UnknownNeuron when a word uses a bit
  /// outside the universe.
  Code(NeuronUniverse universe, std::vector<Codeword> words);

  const NeuronUniverse& universe() const noexcept { return universe_; }
  std::span<const Codeword> codewords() const noexcept { return words_; }
  /// Same words as raw masks, for the bitset kernels.
  std::span<const std::uint64_t> bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return words_.size(); }
  const Codeword& operator[](std::size_t i) const { return words_[i]; }

  bool contains(Codeword c) const;
  /// Position of c in canonical order.
  std::optional<std::size_t> index_of(Codeword c) const;
  /// Throws UnknownCodeword.
  std::size_t require_index(Codeword c) const;

  /// Label-aware equality: same label set and same words after matching
  /// labels, regardless of universe order.
  bool same_as(const Code& other) const;
  bool operator==(const Code& other) const { return same_as(other); }

 private:
  NeuronUniverse universe_;
  std::vector<Codeword> words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> sorted_bits_;
};

// ---- labels <-> codewords ------------------------------------------------

/// Throws UnknownNeuron.
Codeword codeword_from_labels(const NeuronUniverse& u, std::span<const std::string> labels);
std::vector<std::string> labels_of(const NeuronUniverse& u, Codeword c);

/// "{}" for the empty word; concatenated labels when every label is a single
/// character; otherwise "{a,b,c}".
std::string format_codeword(const NeuronUniverse& u, Codeword c);

/// Inverse of format_codeword. Also accepts labels separated by commas or
/// whitespace. A token that is itself a label is read as that one neuron.
Codeword parse_codeword(const NeuronUniverse& u, std::string_view token);

/// Codewords separated by ';' (e.g. "123;23;234").
std::vector<Codeword> parse_codeword_list(const NeuronUniverse& u, std::string_view text);
std::string format_codeword_list(const NeuronUniverse& u, std::span<const Codeword> words,
                                 std::string_view sep = ", ");

// ---- parsing / serialization ----------------------------------------------

/// Detects JSON (starts with '{' followed by a quoted key) vs compact text.
Code parse_code(std::string_view text);
Code parse_code_json(std::string_view json_text);
/// Compact text: "1235,1245,{}". The universe is the set of characters used,
/// sorted, unless one is given explicitly.
Code parse_code_text(std::string_view text, const NeuronUniverse* universe = nullptr);

std::string serialize_code_json(const Code& c);
/// Throws InvalidParameter when some label is longer than one character.
std::string serialize_code_text(const Code& c);

// ---- predicates ---------------------------------------------------------------

std::vector<Codeword> maximal_codewords(const Code& c);
bool is_intersection_complete(const Code& c);
bool is_sunflower_code(const Code& c);

/// Restrict every word to `keep` (a mask over the universe) and drop the
/// other neurons from the universe. Duplicates collapse.
Code project(const Code& c, std::uint64_t keep);
/// Same as project, selecting neurons by label.
Code project_labels(const Code& c, std::span<const std::string> keep);

/// Neuron relabelling C -> D: pairs (label in C, label in D).
struct NeuronBijection {
  std::vector<std::pair<std::string, std::string>> pairs;

  std::optional<std::string> image(std::string_view label) const;
};

/// Exhaustive search for a neuron bijection that carries the codewords of `a`
/// onto those of `b`, pruned by per-neuron degree signatures.
std::optional<NeuronBijection> is_isomorphic(const Code& a, const Code& b);

/// Applies a bijection to every codeword of `c`, producing a code on
/// `target_universe`.
Code apply_bijection(const Code& c, const NeuronBijection& f, const NeuronUniverse& target_universe);

}  // namespace nc

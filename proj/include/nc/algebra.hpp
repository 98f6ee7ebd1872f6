#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nc/core.hpp"

namespace nc {

/// Tk_C(σ): the codewords containing σ. `base` is empty for the empty trunk.
struct Trunk {
  std::optional<Codeword> base;
  std::vector<Codeword> members;  // canonical order
};

Trunk trunk(const Code& c, Codeword sigma);

/// Whether a set of codewords of `c` (flags indexed canonically) is a trunk:
/// the empty set, or exactly Tk_C of the intersection of its members.
bool is_trunk(const Code& c, std::span<const std::uint8_t> members);

/// A total function from the codewords of `source` to those of `target`.
class CodeMap {
 public:
  /// image[k] is the canonical index in `target` of the image of source[k].
  CodeMap(Code source, Code target, std::vector<std::size_t> image);

  /// Throws InvalidParameter when some source word is missing or repeated,
  /// UnknownCodeword when a pair mentions a word of neither code.
  static CodeMap from_pairs(Code source, Code target, const std::vector<std::pair<Codeword, Codeword>>& pairs);

  const Code& source() const noexcept { return source_; }
  const Code& target() const noexcept { return target_; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  Codeword operator()(Codeword c) const { return target_[image_[source_.require_index(c)]]; }

 private:
  Code source_;
  Code target_;
  std::vector<std::size_t> image_;
};

/// Preimages of trunks are trunks. Checks only the single-neuron trunks of
/// the target; every other trunk is an intersection of those.
bool is_morphism(const CodeMap& f);

bool is_surjective(const CodeMap& f);

/// A surjective morphism D -> C witnesses that C is a minor of D.
bool is_minor_witness(const CodeMap& f);

/// Exhaustive search for a surjective morphism from `source` onto `target`.
/// Limited to sources with at most 9 codewords; throws InvalidParameter above.
std::optional<CodeMap> find_minor_witness(const Code& source, const Code& target);

inline constexpr std::size_t kMaxMinorSearchSource = 9;

struct CoveredCode {
  Code code;   // image of f_i on σ ∪ σbar, σ = all neurons but i
  CodeMap map; // f_i
};

/// The i-th covered code. Barred copies of the neurons other than i get a
/// "bar" suffix. Throws UnknownNeuron.
CoveredCode covered_code(const Code& c, std::string_view neuron);
CoveredCode covered_code(const Code& c, std::size_t neuron);

struct NeuronRemoval {
  enum class Reason { Trivial, Redundant };

  std::string neuron;
  Reason reason;
  std::vector<std::string> witness;  // σ with Tk(neuron) = Tk(σ); empty for trivial removals
};

struct Reduction {
  Code code;
  std::vector<NeuronRemoval> log;
};

enum class RemovalOrder {
  Canonical,        // smallest neuron index first
  LargestFirst,     // largest neuron index first; used to cross-check the canonical order
};

/// Removes trivial and redundant neurons until none remain. Witnesses are the
/// first σ in canonical order (cardinality, then lexicographic).
Reduction reduce_code(const Code& c, RemovalOrder order = RemovalOrder::Canonical);

}  // namespace nc

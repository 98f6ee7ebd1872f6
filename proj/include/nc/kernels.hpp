#pragma once

// Bitset-array kernels over codeword masks. Every kernel has a scalar
// reference implementation; AVX2 (x86-64) and NEON (aarch64) variants are
// selected at runtime and must agree with the scalar one bit for bit.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace nc::kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;

  /// out[k] = 1 iff (words[k] & query) == query.
  void (*superset_flags)(std::span<const std::uint64_t> words, std::uint64_t query,
                         std::span<std::uint8_t> out);
  /// out[k] = 1 iff (words[k] & ~query) == 0.
  void (*subset_flags)(std::span<const std::uint64_t> words, std::uint64_t query,
                       std::span<std::uint8_t> out);
  /// out[k] = 1 iff words[k] and pivot are distinct and one contains the other.
  void (*strict_comparable_flags)(std::span<const std::uint64_t> words, std::uint64_t pivot,
                                  std::span<std::uint8_t> out);
  /// dst[k] = src[k] & mask.
  void (*and_broadcast)(std::span<const std::uint64_t> src, std::uint64_t mask,
                        std::span<std::uint64_t> dst);
  /// Smallest k with (prefix[k] & next & ~interior_and[k]) != 0, or npos.
  std::size_t (*first_triple_violation)(std::span<const std::uint64_t> prefix,
                                        std::span<const std::uint64_t> interior_and,
                                        std::uint64_t next);
};

const KernelTable& scalar_table();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();
const KernelTable* neon_table();

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

/// The table used by the library. Picks the widest available ISA unless
/// NC_KERNELS=scalar|avx2|neon says otherwise (an unavailable request falls
/// back to scalar).
const KernelTable& active();

// Thin wrappers over active().

inline void superset_flags(std::span<const std::uint64_t> words, std::uint64_t query,
                           std::span<std::uint8_t> out) {
  active().superset_flags(words, query, out);
}
inline void subset_flags(std::span<const std::uint64_t> words, std::uint64_t query,
                         std::span<std::uint8_t> out) {
  active().subset_flags(words, query, out);
}
inline void strict_comparable_flags(std::span<const std::uint64_t> words, std::uint64_t pivot,
                                    std::span<std::uint8_t> out) {
  active().strict_comparable_flags(words, pivot, out);
}
inline void and_broadcast(std::span<const std::uint64_t> src, std::uint64_t mask,
                          std::span<std::uint64_t> dst) {
  active().and_broadcast(src, mask, dst);
}
inline std::size_t first_triple_violation(std::span<const std::uint64_t> prefix,
                                          std::span<const std::uint64_t> interior_and,
                                          std::uint64_t next) {
  return active().first_triple_violation(prefix, interior_and, next);
}

}  // namespace nc::kernels

#include "kernels_internal.hpp"

namespace nc::kernels::detail {
namespace {

void superset_flags(std::span<const std::uint64_t> words, std::uint64_t query,
                    std::span<std::uint8_t> out) {
  for (std::size_t k = 0; k < words.size(); ++k) out[k] = (words[k] & query) == query;
}

void subset_flags(std::span<const std::uint64_t> words, std::uint64_t query,
                  std::span<std::uint8_t> out) {
  for (std::size_t k = 0; k < words.size(); ++k) out[k] = (words[k] & ~query) == 0;
}

void strict_comparable_flags(std::span<const std::uint64_t> words, std::uint64_t pivot,
                             std::span<std::uint8_t> out) {
  for (std::size_t k = 0; k < words.size(); ++k) {
    const std::uint64_t w = words[k];
    const std::uint64_t both = w & pivot;
    out[k] = w != pivot && (both == w || both == pivot);
  }
}

void and_broadcast(std::span<const std::uint64_t> src, std::uint64_t mask,
                   std::span<std::uint64_t> dst) {
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] = src[k] & mask;
}

std::size_t first_triple_violation(std::span<const std::uint64_t> prefix,
                                   std::span<const std::uint64_t> interior_and,
                                   std::uint64_t next) {
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if ((prefix[k] & next & ~interior_and[k]) != 0) return k;
  }
  return npos;
}

}  // namespace

const KernelTable kScalarTable{
    Isa::Scalar,     superset_flags, subset_flags, strict_comparable_flags,
    and_broadcast,   first_triple_violation,
};

}  // namespace nc::kernels::detail

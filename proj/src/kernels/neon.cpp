// NEON variants: two 64-bit masks per 128-bit register.

#include "kernels_internal.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace nc::kernels::detail {
namespace {

inline void store_flags(std::uint8_t* out, uint64x2_t lanes) {
  out[0] = vgetq_lane_u64(lanes, 0) != 0;
  out[1] = vgetq_lane_u64(lanes, 1) != 0;
}

void superset_flags(std::span<const std::uint64_t> words, std::uint64_t query,
                    std::span<std::uint8_t> out) {
  const uint64x2_t q = vdupq_n_u64(query);
  std::size_t k = 0;
  for (; k + 2 <= words.size(); k += 2) {
    const uint64x2_t w = vld1q_u64(words.data() + k);
    store_flags(out.data() + k, vceqq_u64(vandq_u64(w, q), q));
  }
  for (; k < words.size(); ++k) out[k] = (words[k] & query) == query;
}

void subset_flags(std::span<const std::uint64_t> words, std::uint64_t query,
                  std::span<std::uint8_t> out) {
  const uint64x2_t q = vdupq_n_u64(query);
  const uint64x2_t zero = vdupq_n_u64(0);
  std::size_t k = 0;
  for (; k + 2 <= words.size(); k += 2) {
    const uint64x2_t w = vld1q_u64(words.data() + k);
    store_flags(out.data() + k, vceqq_u64(vbicq_u64(w, q), zero));
  }
  for (; k < words.size(); ++k) out[k] = (words[k] & ~query) == 0;
}

void strict_comparable_flags(std::span<const std::uint64_t> words, std::uint64_t pivot,
                             std::span<std::uint8_t> out) {
  const uint64x2_t p = vdupq_n_u64(pivot);
  std::size_t k = 0;
  for (; k + 2 <= words.size(); k += 2) {
    const uint64x2_t w = vld1q_u64(words.data() + k);
    const uint64x2_t both = vandq_u64(w, p);
    const uint64x2_t comparable = vorrq_u64(vceqq_u64(both, w), vceqq_u64(both, p));
    store_flags(out.data() + k, vbicq_u64(comparable, vceqq_u64(w, p)));
  }
  for (; k < words.size(); ++k) {
    const std::uint64_t w = words[k];
    const std::uint64_t both = w & pivot;
    out[k] = w != pivot && (both == w || both == pivot);
  }
}

void and_broadcast(std::span<const std::uint64_t> src, std::uint64_t mask,
                   std::span<std::uint64_t> dst) {
  const uint64x2_t m = vdupq_n_u64(mask);
  std::size_t k = 0;
  for (; k + 2 <= src.size(); k += 2) vst1q_u64(dst.data() + k, vandq_u64(vld1q_u64(src.data() + k), m));
  for (; k < src.size(); ++k) dst[k] = src[k] & mask;
}

std::size_t first_triple_violation(std::span<const std::uint64_t> prefix,
                                   std::span<const std::uint64_t> interior_and,
                                   std::uint64_t next) {
  const uint64x2_t n = vdupq_n_u64(next);
  std::size_t k = 0;
  for (; k + 2 <= prefix.size(); k += 2) {
    const uint64x2_t both = vandq_u64(vld1q_u64(prefix.data() + k), n);
    const uint64x2_t escaped = vbicq_u64(both, vld1q_u64(interior_and.data() + k));
    if (vgetq_lane_u64(escaped, 0) != 0) return k;
    if (vgetq_lane_u64(escaped, 1) != 0) return k + 1;
  }
  for (; k < prefix.size(); ++k) {
    if ((prefix[k] & next & ~interior_and[k]) != 0) return k;
  }
  return npos;
}

}  // namespace

const KernelTable kNeonTable{
    Isa::Neon,       superset_flags, subset_flags, strict_comparable_flags,
    and_broadcast,   first_triple_violation,
};

}  // namespace nc::kernels::detail

#endif

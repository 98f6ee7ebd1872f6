// AVX2 variants: four 64-bit masks per 256-bit lane. Functions carry a
// target attribute so the rest of the library builds for the baseline ISA.

#include "kernels_internal.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#define NC_AVX2 __attribute__((target("avx2")))

namespace nc::kernels::detail {
namespace {

NC_AVX2 inline __m256i load4(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

NC_AVX2 inline void store_flags(std::uint8_t* out, __m256i lanes) {
  const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(lanes));
  out[0] = bits & 1;
  out[1] = (bits >> 1) & 1;
  out[2] = (bits >> 2) & 1;
  out[3] = (bits >> 3) & 1;
}

NC_AVX2 void superset_flags(std::span<const std::uint64_t> words, std::uint64_t query,
                            std::span<std::uint8_t> out) {
  const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query));
  std::size_t k = 0;
  for (; k + 4 <= words.size(); k += 4) {
    const __m256i w = load4(words.data() + k);
    store_flags(out.data() + k, _mm256_cmpeq_epi64(_mm256_and_si256(w, q), q));
  }
  for (; k < words.size(); ++k) out[k] = (words[k] & query) == query;
}

NC_AVX2 void subset_flags(std::span<const std::uint64_t> words, std::uint64_t query,
                          std::span<std::uint8_t> out) {
  const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= words.size(); k += 4) {
    const __m256i w = load4(words.data() + k);
    store_flags(out.data() + k, _mm256_cmpeq_epi64(_mm256_andnot_si256(q, w), zero));
  }
  for (; k < words.size(); ++k) out[k] = (words[k] & ~query) == 0;
}

NC_AVX2 void strict_comparable_flags(std::span<const std::uint64_t> words, std::uint64_t pivot,
                                     std::span<std::uint8_t> out) {
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(pivot));
  std::size_t k = 0;
  for (; k + 4 <= words.size(); k += 4) {
    const __m256i w = load4(words.data() + k);
    const __m256i both = _mm256_and_si256(w, p);
    const __m256i comparable = _mm256_or_si256(_mm256_cmpeq_epi64(both, w), _mm256_cmpeq_epi64(both, p));
    const __m256i equal = _mm256_cmpeq_epi64(w, p);
    store_flags(out.data() + k, _mm256_andnot_si256(equal, comparable));
  }
  for (; k < words.size(); ++k) {
    const std::uint64_t w = words[k];
    const std::uint64_t both = w & pivot;
    out[k] = w != pivot && (both == w || both == pivot);
  }
}

NC_AVX2 void and_broadcast(std::span<const std::uint64_t> src, std::uint64_t mask,
                           std::span<std::uint64_t> dst) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  std::size_t k = 0;
  for (; k + 4 <= src.size(); k += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + k), _mm256_and_si256(load4(src.data() + k), m));
  }
  for (; k < src.size(); ++k) dst[k] = src[k] & mask;
}

NC_AVX2 std::size_t first_triple_violation(std::span<const std::uint64_t> prefix,
                                           std::span<const std::uint64_t> interior_and,
                                           std::uint64_t next) {
  const __m256i n = _mm256_set1_epi64x(static_cast<long long>(next));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= prefix.size(); k += 4) {
    const __m256i both = _mm256_and_si256(load4(prefix.data() + k), n);
    const __m256i escaped = _mm256_andnot_si256(load4(interior_and.data() + k), both);
    if (!_mm256_testz_si256(escaped, escaped)) {
      const int clean = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(escaped, zero)));
      return k + static_cast<std::size_t>(__builtin_ctz(~clean & 0xF));
    }
  }
  for (; k < prefix.size(); ++k) {
    if ((prefix[k] & next & ~interior_and[k]) != 0) return k;
  }
  return npos;
}

}  // namespace

const KernelTable kAvx2Table{
    Isa::Avx2,       superset_flags, subset_flags, strict_comparable_flags,
    and_broadcast,   first_triple_violation,
};

}  // namespace nc::kernels::detail

#endif

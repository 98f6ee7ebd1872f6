#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace nc::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_table() { return detail::kScalarTable; }

const KernelTable* avx2_table() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_table() {
#if defined(__aarch64__)
  // Advanced SIMD is mandatory on AArch64.
  return &detail::kNeonTable;
#else
  return nullptr;
#endif
}

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> tables{&scalar_table()};
  if (const auto* t = avx2_table()) tables.push_back(t);
  if (const auto* t = neon_table()) tables.push_back(t);
  return tables;
}

namespace {

const KernelTable& select() {
  const char* env = std::getenv("NC_KERNELS");
  const std::string_view want = env ? env : "";
  if (want == "scalar") return scalar_table();
  if (want == "avx2") return avx2_table() ? *avx2_table() : scalar_table();
  if (want == "neon") return neon_table() ? *neon_table() : scalar_table();
  if (const auto* t = avx2_table()) return *t;
  if (const auto* t = neon_table()) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace nc::kernels

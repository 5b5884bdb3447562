#include "pinilot/simd/bitset_kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

namespace pinilot::simd {

#ifdef PINILOT_HAVE_AVX2
// Defined in bitset_kernels_avx2.cpp, the only unit built with -mavx2.
const BitsetKernels &avx2_kernel_table();
#endif

namespace {

std::size_t scalar_popcount(const std::uint64_t *a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i)
    total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t scalar_and_popcount(const std::uint64_t *a, const std::uint64_t *b,
                                std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i)
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool scalar_is_subset(const std::uint64_t *a, const std::uint64_t *b,
                      std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if ((a[i] & ~b[i]) != 0)
      return false;
  return true;
}

bool scalar_intersects(const std::uint64_t *a, const std::uint64_t *b,
                       std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if ((a[i] & b[i]) != 0)
      return true;
  return false;
}

void scalar_and_into(std::uint64_t *dst, const std::uint64_t *src,
                     std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    dst[i] &= src[i];
}

void scalar_or_into(std::uint64_t *dst, const std::uint64_t *src,
                    std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    dst[i] |= src[i];
}

const BitsetKernels kScalar{"scalar",          scalar_popcount,
                            scalar_and_popcount, scalar_is_subset,
                            scalar_intersects,   scalar_and_into,
                            scalar_or_into};

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const BitsetKernels *initial_kernels() {
  if (const char *env = std::getenv("PINILOT_SIMD")) {
    if (std::string(env) == "scalar")
      return &kScalar;
  }
  if (const BitsetKernels *k = avx2_kernels())
    return k;
  return &kScalar;
}

std::atomic<const BitsetKernels *> &active_slot() {
  static std::atomic<const BitsetKernels *> slot{initial_kernels()};
  return slot;
}

} // namespace

const BitsetKernels &scalar_kernels() { return kScalar; }

const BitsetKernels *avx2_kernels() {
#ifdef PINILOT_HAVE_AVX2
  static const bool usable = cpu_has_avx2();
  return usable ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

std::vector<const BitsetKernels *> available_kernels() {
  std::vector<const BitsetKernels *> out{&kScalar};
  if (const BitsetKernels *k = avx2_kernels())
    out.push_back(k);
  return out;
}

const BitsetKernels &active_kernels() {
  return *active_slot().load(std::memory_order_relaxed);
}

bool select_kernels(std::string_view name) {
  for (const BitsetKernels *k : available_kernels()) {
    if (name == k->name) {
      active_slot().store(k, std::memory_order_relaxed);
      return true;
    }
  }
  return false;
}

} // namespace pinilot::simd

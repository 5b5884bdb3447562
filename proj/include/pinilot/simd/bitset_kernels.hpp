#pragma once

// Word-parallel kernels over element bitsets.
//
// Every subgroup, coset and product set in the engine is a bitset over the
// element indices of its parent group. The lattice and supplement searches
// spend most of their time in the handful of operations below, so each has a
// portable scalar reference and, on x86-64, an AVX2 variant. The active table
// is picked once at startup from CPUID and can be forced for testing.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace pinilot::simd {

struct BitsetKernels {
  const char *name;
  std::size_t (*popcount)(const std::uint64_t *a, std::size_t words);
  std::size_t (*and_popcount)(const std::uint64_t *a, const std::uint64_t *b,
                              std::size_t words);
  bool (*is_subset)(const std::uint64_t *a, const std::uint64_t *b,
                    std::size_t words);
  bool (*intersects)(const std::uint64_t *a, const std::uint64_t *b,
                     std::size_t words);
  void (*and_into)(std::uint64_t *dst, const std::uint64_t *src,
                   std::size_t words);
  void (*or_into)(std::uint64_t *dst, const std::uint64_t *src,
                  std::size_t words);
};

const BitsetKernels &scalar_kernels();

// nullptr when the build has no AVX2 translation unit or the CPU lacks AVX2.
const BitsetKernels *avx2_kernels();

// Every variant usable on this machine, scalar first.
std::vector<const BitsetKernels *> available_kernels();

const BitsetKernels &active_kernels();

// Force a variant by name ("scalar", "avx2"). Returns false if unavailable.
// Not synchronized with concurrent kernel calls; call before spawning workers.
bool select_kernels(std::string_view name);

} // namespace pinilot::simd

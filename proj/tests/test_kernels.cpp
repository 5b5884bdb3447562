#include <doctest.h>

#include <random>

#include "pinilot/element_set.hpp"
#include "pinilot/simd/bitset_kernels.hpp"

using namespace pinilot;

TEST_CASE("every kernel variant agrees with the scalar reference") {
  const auto &ref = simd::scalar_kernels();
  std::mt19937_64 rng(12345);
  constexpr std::size_t W = ElementSet::kWords;
  for (const simd::BitsetKernels *k : simd::available_kernels()) {
    CAPTURE(k->name);
    for (int trial = 0; trial < 2000; ++trial) {
      std::uint64_t a[W], b[W];
      const int density = trial % 4;
      for (std::size_t i = 0; i < W; ++i) {
        a[i] = rng();
        b[i] = rng();
        if (density == 1)
          b[i] |= a[i];
        if (density == 2)
          b[i] &= ~a[i];
        if (density == 3 && i % 2)
          a[i] = 0;
      }
      for (std::size_t words : {std::size_t{1}, std::size_t{3}, W}) {
        CHECK(k->popcount(a, words) == ref.popcount(a, words));
        CHECK(k->and_popcount(a, b, words) == ref.and_popcount(a, b, words));
        CHECK(k->is_subset(a, b, words) == ref.is_subset(a, b, words));
        CHECK(k->intersects(a, b, words) == ref.intersects(a, b, words));
        std::uint64_t x[W], y[W];
        std::copy(a, a + W, x);
        std::copy(a, a + W, y);
        k->and_into(x, b, words);
        ref.and_into(y, b, words);
        CHECK(std::equal(x, x + W, y));
        std::copy(a, a + W, x);
        std::copy(a, a + W, y);
        k->or_into(x, b, words);
        ref.or_into(y, b, words);
        CHECK(std::equal(x, x + W, y));
      }
    }
  }
}

TEST_CASE("kernel selection") {
  CHECK(simd::select_kernels("scalar"));
  CHECK(std::string(simd::active_kernels().name) == "scalar");
  CHECK_FALSE(simd::select_kernels("neon-does-not-exist"));
  if (simd::avx2_kernels()) {
    CHECK(simd::select_kernels("avx2"));
    CHECK(std::string(simd::active_kernels().name) == "avx2");
  }
  ElementSet s = ElementSet::first_n(300);
  CHECK(s.size() == 300);
  s.erase(7);
  CHECK(s.size() == 299);
  CHECK_FALSE(s.contains(7));
  CHECK(s.is_subset_of(ElementSet::first_n(300)));
}

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "archevo/rng.hpp"

using namespace archevo;

TEST_SUITE("rng") {

TEST_CASE("identical identity replays the identical sequence") {
  RandomSource a(1234567, 9);
  RandomSource b(1234567, 9);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("distinct seeds and streams diverge") {
  RandomSource base(42, 0);
  RandomSource other_seed(43, 0);
  RandomSource other_stream(42, 1);
  bool seed_differs = false;
  bool stream_differs = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t reference = base.next_u64();
    seed_differs |= reference != other_seed.next_u64();
    stream_differs |= reference != other_stream.next_u64();
  }
  CHECK(seed_differs);
  CHECK(stream_differs);
}

TEST_CASE("derived streams key on identity, not on consumed state") {
  RandomSource fresh(77, 3);
  RandomSource warmed(77, 3);
  for (int i = 0; i < 17; ++i) warmed.next_u64();

  RandomSource from_fresh = fresh.derived(rng_tag::kSlot, 5, 2);
  RandomSource from_warmed = warmed.derived(rng_tag::kSlot, 5, 2);
  for (int i = 0; i < 100; ++i) {
    CHECK(from_fresh.next_u64() == from_warmed.next_u64());
  }
}

TEST_CASE("derived streams with different keys diverge") {
  RandomSource root(7, 0);
  std::array<RandomSource, 4> children = {
      root.derived(1, 0, 0), root.derived(2, 0, 0),
      root.derived(1, 1, 0), root.derived(1, 0, 1)};
  for (std::size_t a = 0; a < children.size(); ++a) {
    for (std::size_t b = a + 1; b < children.size(); ++b) {
      RandomSource lhs = children[a];
      RandomSource rhs = children[b];
      bool differs = false;
      for (int i = 0; i < 16; ++i) differs |= lhs.next_u64() != rhs.next_u64();
      CHECK(differs);
    }
  }
}

TEST_CASE("next_double covers [0,1) with the expected mean") {
  RandomSource rng(11, 0);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double p = rng.next_double();
    REQUIRE(p >= 0.0);
    REQUIRE(p < 1.0);
    sum += p;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("next_in stays inside the requested interval") {
  RandomSource rng(5, 0);
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.next_in(-2.5, 7.25);
    REQUIRE(v >= -2.5);
    REQUIRE(v <= 7.25);
  }
}

TEST_CASE("next_index is bounded and roughly uniform") {
  RandomSource rng(99, 0);
  for (int i = 0; i < 1000; ++i) CHECK(rng.next_index(1) == 0);

  std::array<int, 4> counts{};
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    const std::size_t k = rng.next_index(4);
    REQUIRE(k < 4);
    ++counts[k];
  }
  // 4 sigma of Binomial(40000, 1/4) is about 350.
  for (int count : counts) CHECK(std::abs(count - n / 4) < 400);
}

}  // TEST_SUITE

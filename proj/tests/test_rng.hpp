#pragma once

#include <cstdint>

// Small deterministic generator for property-style tests.
struct TestRng {
  uint64_t state = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  // Uniform-ish in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

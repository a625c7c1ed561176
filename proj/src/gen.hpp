#pragma once

#include <cstdint>

#include "tree.hpp"

namespace wkl {

// Fixed linear congruential generator so fixtures reproduce across
// implementations: state := 1664525 * state + 1013904223 (mod 2^32);
// below(n) maps the fresh state to [0, n) by multiply-shift.
class Lcg {
 public:
  explicit Lcg(uint32_t seed) : state_(seed) {}

  uint32_t next() {
    state_ = state_ * 1664525u + 1013904223u;
    return state_;
  }

  uint32_t below(uint32_t n) {
    return static_cast<uint32_t>((static_cast<uint64_t>(next()) * n) >> 32);
  }

 private:
  uint32_t state_;
};

// The spine-with-bristles fixture: 0^k for k <= depth plus a dead 1-bristle
// off every spine node.
TreeTruncation gen_comb(uint32_t depth);

// Two disjoint full-depth chains 0^k and 1^k.
TreeTruncation gen_twochain(uint32_t depth);

// Every binary string of length <= depth.
TreeTruncation gen_fullbinary(uint32_t depth);

// k random full-depth chains decorated with short dead bristles. At any
// lookahead >= kBristleBound only chain prefixes survive, so the
// lookahead-extendible width never exceeds k.
inline constexpr uint32_t kBristleBound = 3;
TreeTruncation gen_bristled(uint32_t k, uint32_t depth, uint32_t seed);

}  // namespace wkl

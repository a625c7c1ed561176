#pragma once

#include <cstdint>
#include <vector>

#include "gen.hpp"
#include "seq.hpp"
#include "tree.hpp"

namespace wkl::test {

inline Seq seq(std::initializer_list<uint32_t> entries) {
  return Seq(std::vector<uint32_t>(entries));
}

inline Seq repeated(uint32_t symbol, size_t count) {
  return Seq(std::vector<uint32_t>(count, symbol));
}

inline TreeTruncation make_tree(std::vector<Seq> nodes, uint32_t horizon,
                                Alphabet alphabet = Alphabet::kBinary) {
  return TreeTruncation::validate(std::move(nodes), horizon, alphabet);
}

// {e, 0, 1, 00, 01}
inline TreeTruncation vee() {
  return make_tree({seq({}), seq({0}), seq({1}), seq({0, 0}), seq({0, 1})}, 2);
}

// A single chain of the given symbol.
inline TreeTruncation chain(uint32_t symbol, uint32_t depth) {
  std::vector<Seq> nodes;
  for (uint32_t k = 0; k <= depth; ++k) nodes.push_back(repeated(symbol, k));
  return make_tree(std::move(nodes), depth);
}

// Exhaustive maximum-antichain oracle: sweeps every subset of the node set
// via bitmask dynamic programming over comparability masks. Usable up to
// ~20 nodes; independent of the production antichain path.
inline size_t antichain_oracle(const TreeTruncation& t) {
  std::vector<Seq> nodes = t.all_nodes();
  size_t n = nodes.size();
  std::vector<uint64_t> comparable_mask(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (comparable(nodes[i], nodes[j])) {
        comparable_mask[i] |= uint64_t{1} << j;
      }
    }
  }
  size_t best = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    uint64_t rest = mask;
    bool antichain = true;
    while (rest && antichain) {
      uint64_t low = rest & (~rest + 1);
      size_t i = static_cast<size_t>(__builtin_ctzll(rest));
      antichain = (comparable_mask[i] & mask) == low;
      rest ^= low;
    }
    if (antichain) {
      best = std::max(best, static_cast<size_t>(__builtin_popcountll(mask)));
    }
  }
  return best;
}

// Random prefix-closed tree with at most max_nodes nodes; horizon is the
// deepest node generated.
inline TreeTruncation random_tree(Lcg& rng, size_t max_nodes,
                                  Alphabet alphabet = Alphabet::kBinary,
                                  uint32_t depth_cap = 8) {
  uint32_t fanout = symbol_bound(alphabet).value_or(4);
  std::vector<Seq> nodes = {Seq()};
  size_t attempts = max_nodes * 4;
  while (nodes.size() < max_nodes && attempts-- > 0) {
    const Seq& base = nodes[rng.below(static_cast<uint32_t>(nodes.size()))];
    if (base.length() >= depth_cap) continue;
    Seq child = base.extended(rng.below(fanout));
    bool fresh = true;
    for (const Seq& existing : nodes) {
      if (existing == child) {
        fresh = false;
        break;
      }
    }
    if (fresh) nodes.push_back(std::move(child));
  }
  uint32_t horizon = 0;
  for (const Seq& node : nodes) {
    horizon = std::max(horizon, static_cast<uint32_t>(node.length()));
  }
  return make_tree(std::move(nodes), horizon, alphabet);
}

}  // namespace wkl::test

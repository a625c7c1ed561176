#include "gen.hpp"

#include <set>
#include <string>

#include "error.hpp"

namespace wkl {

TreeTruncation gen_comb(uint32_t depth) {
  std::vector<Seq> nodes;
  Seq spine;
  nodes.push_back(spine);
  for (uint32_t k = 0; k < depth; ++k) {
    nodes.push_back(spine.extended(1));
    spine = spine.extended(0);
    nodes.push_back(spine);
  }
  return TreeTruncation::validate(std::move(nodes), depth, Alphabet::kBinary);
}

TreeTruncation gen_twochain(uint32_t depth) {
  std::vector<Seq> nodes;
  Seq zeros, ones;
  nodes.push_back(zeros);
  for (uint32_t k = 0; k < depth; ++k) {
    zeros = zeros.extended(0);
    ones = ones.extended(1);
    nodes.push_back(zeros);
    nodes.push_back(ones);
  }
  return TreeTruncation::validate(std::move(nodes), depth, Alphabet::kBinary);
}

TreeTruncation gen_fullbinary(uint32_t depth) {
  if (depth > 16) {
    fail(ErrorKind::kUsage, "depth-too-large: " + std::to_string(depth));
  }
  std::vector<Seq> nodes;
  std::vector<Seq> frontier = {Seq()};
  nodes.push_back(Seq());
  for (uint32_t k = 0; k < depth; ++k) {
    std::vector<Seq> next;
    for (const Seq& node : frontier) {
      next.push_back(node.extended(0));
      next.push_back(node.extended(1));
    }
    nodes.insert(nodes.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return TreeTruncation::validate(std::move(nodes), depth, Alphabet::kBinary);
}

TreeTruncation gen_bristled(uint32_t k, uint32_t depth, uint32_t seed) {
  if (k == 0) fail(ErrorKind::kUsage, "invalid-params: k=0");
  if (depth < kBristleBound + 1) {
    fail(ErrorKind::kUsage,
         "invalid-params: depth below " + std::to_string(kBristleBound + 1));
  }
  Lcg rng(seed);

  // Chains first, bristles second; draw order is part of the fixture.
  std::vector<std::vector<uint32_t>> chains(k);
  for (uint32_t c = 0; c < k; ++c) {
    for (uint32_t d = 0; d < depth; ++d) chains[c].push_back(rng.below(2));
  }

  std::set<Seq, ShortlexLess> nodes;
  nodes.insert(Seq());
  for (uint32_t c = 0; c < k; ++c) {
    Seq prefix;
    for (uint32_t d = 0; d < depth; ++d) {
      prefix = prefix.extended(chains[c][d]);
      nodes.insert(prefix);
    }
  }
  for (uint32_t c = 0; c < k; ++c) {
    Seq prefix;
    for (uint32_t d = 0; d < depth; ++d) {
      if (rng.below(3) == 0) {
        Seq bristle = prefix.extended(chains[c][d] ^ 1u);
        uint32_t len = 1 + rng.below(kBristleBound);
        len = std::min(len, depth - d);
        nodes.insert(bristle);
        for (uint32_t extra = 1; extra < len; ++extra) {
          bristle = bristle.extended(rng.below(2));
          nodes.insert(bristle);
        }
      }
      prefix = prefix.extended(chains[c][d]);
    }
  }
  return TreeTruncation::validate({nodes.begin(), nodes.end()}, depth,
                                  Alphabet::kBinary);
}

}  // namespace wkl

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "enum_tree.hpp"
#include "seq.hpp"
#include "tables.hpp"
#include "tree.hpp"

namespace wkl {

// Interpretation of an enumerated tree as a nat tree: tau is a member when
// each entry tau(i) indexes an enumerated string of length i and the
// indexed strings form a prefix chain. Paths of the interpretation project
// back onto paths of the source.
TreeTruncation hat_interpret(const EnumeratedTree& e, uint32_t depth);

// Endpoint of the chain named by tau: the enumerated string at its last
// index (the root for empty tau). tau must be a member of the
// interpretation.
Seq project_hat_path(const EnumeratedTree& e, const Seq& tau);

// The enumerated binary tree whose stage-m string has a 1 at i exactly
// when some m' < m puts i into the enumerated set. Stage m contributes the
// prefixes of its string of length min(m-1, horizon); the length cap is
// the guard m > lh(sigma), which keeps frozen stage strings from posing as
// paths.
EnumeratedTree unique_path_tree(const PredicateTable& theta, uint32_t horizon);

struct PaddingSchedule {
  uint32_t bound_c = 0;
  std::vector<uint32_t> entries;  // s_0 < s_1 < ... scheduled positions
  uint32_t source_horizon = 0;
  // Lookahead governing the deepest symbol layer (one past the schedule).
  uint32_t top_lookahead = 0;
};

struct PaddingResult {
  TreeTruncation narrowed;
  PaddingSchedule schedule;
};

// Width-c padding of a binary tree into a ternary tree: position s_n of a
// padded string carries the n-th symbol of a surviving source node, every
// other position carries 2, and s_n is the least lookahead past s_{n-1} at
// which level n narrows to width <= c (base case s_{-1} = 0, so position 0
// is always padding). Every level of the result has width <= c, and
// removing the 2s from any node recovers a source node. When max_levels is
// not given the schedule is extended as far as the horizon allows.
PaddingResult pad_to_narrow(const TreeTruncation& t, uint32_t c,
                            std::optional<uint32_t> max_levels);

// Subsequence of entries different from 2, order preserved.
Seq strip_twos(const Seq& s);

// Left-most member of the deepest level; its prefixes form a branch.
Seq leftmost_maximal_branch(const TreeTruncation& t);

// Counterexample tree for the prefix-free-bounded hypothesis: stage n
// emits the downward closure of {1^{h(n)} 0^y : y <= n}. The accumulated
// tree has prefix-free sets bounded by h's range bound but no deep
// extension survives forever.
EnumeratedTree cex_prefix_free(const FunctionTable& h, uint32_t horizon);

// Counterexample tree for the level-width-bounded hypothesis: stage m
// emits prefixes of the string whose i-th bit holds when theta(m', i) for
// every m' < m, as long as its count of ones stays within c.
EnumeratedTree cex_level_width(const PredicateTable& theta, uint32_t c,
                               uint32_t horizon);

}  // namespace wkl

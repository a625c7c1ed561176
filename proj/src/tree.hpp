#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "seq.hpp"
#include "tables.hpp"

namespace wkl {

// A validated finite tree truncation: prefix-closed, rooted, every node
// within the depth horizon and the declared alphabet. Nodes are stored per
// level in pointwise order, so level sets and extension scans are range
// lookups. Immutable after validation.
class TreeTruncation {
 public:
  // Checks prefix-closure, root, horizon and alphabet discipline; on
  // failure names the first offending node in shortlex order.
  static TreeTruncation validate(std::vector<Seq> nodes, uint32_t horizon,
                                 Alphabet alphabet);

  Alphabet alphabet() const { return alphabet_; }
  uint32_t horizon() const { return horizon_; }
  size_t node_count() const { return node_count_; }

  // Deepest populated level (0 for the root-only tree).
  uint32_t deepest() const;

  // Largest entry over all nodes; one past it is the recorded branching
  // bound for nat trees.
  uint32_t max_entry() const { return max_entry_; }

  bool contains(const Seq& s) const;

  // Level members in pointwise (left-most first) order. n must be within
  // the horizon; levels beyond the deepest node are empty, not errors.
  const std::vector<Seq>& level(uint32_t n) const;

  // True when some member of level `depth` extends s.
  bool has_extension_at(const Seq& s, uint32_t depth) const;

  // Membership plus an extension s levels deeper (trivial at s = 0).
  // Requires length + s within the horizon.
  bool survives(const Seq& s, uint32_t lookahead) const;

  // Children of s present in the tree, left-most first.
  std::vector<Seq> children(const Seq& s) const;

  // All nodes in shortlex order.
  std::vector<Seq> all_nodes() const;

 private:
  TreeTruncation() = default;

  std::vector<std::vector<Seq>> levels_;
  Alphabet alphabet_ = Alphabet::kBinary;
  uint32_t horizon_ = 0;
  uint32_t max_entry_ = 0;
  size_t node_count_ = 0;
};

// T^{=n}: the length-n members, left-most first.
std::vector<Seq> level_set(const TreeTruncation& t, uint32_t n);

// T_s^{=n}: members of T^{=n} with an extension s levels deeper.
std::vector<Seq> lookahead_extendible(const TreeTruncation& t, uint32_t n,
                                      uint32_t s);

bool is_path_prefix(const TreeTruncation& t, const Seq& s);

struct AntichainResult {
  size_t size = 0;
  std::vector<Seq> witness;  // shortlex order
};

// Maximum cardinality of a pairwise-incomparable node set, with the
// lexicographically least witness attaining it. The size is the number of
// leaves of the truncation; the witness consists of the minimal nodes
// whose subtree carries a single leaf.
AntichainResult max_antichain(const TreeTruncation& t);

struct LevelWidths {
  uint32_t level = 0;
  size_t level_width = 0;
  // Lookahead widths per requested s; nullopt when level + s exceeds the
  // horizon.
  std::vector<std::pair<uint32_t, std::optional<size_t>>> ext_widths;
};

struct WidthReport {
  std::vector<LevelWidths> levels;
  size_t max_antichain_size = 0;
  std::vector<Seq> antichain_witness;
};

WidthReport width_profile(const TreeTruncation& t,
                          const std::vector<uint32_t>& lookaheads);

struct VsmallRow {
  uint32_t m = 0;
  uint32_t level = 0;      // f(m)
  uint32_t lookahead = 0;  // largest feasible: horizon - f(m)
  size_t width = 0;
  bool violates = false;  // width >= m
};

struct VsmallResult {
  bool pass = false;
  uint32_t witness_n = 0;             // valid when pass
  std::optional<uint32_t> violating;  // least violating m >= start bound
  std::vector<VsmallRow> rows;
};

// Very-smallness check at desk scale: looks for n <= start_bound such that
// every checkable m >= n has fewer than m nodes at level f(m) surviving the
// largest feasible lookahead.
VsmallResult vsmall_check(const TreeTruncation& t, const FunctionTable& f,
                          uint32_t start_bound);

}  // namespace wkl

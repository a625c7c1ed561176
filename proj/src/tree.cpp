#include "tree.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "error.hpp"

namespace wkl {

namespace {

std::string node_text(const Seq& s, Alphabet a) { return render_seq(s, a); }

// Compares a level member against a candidate prefix: the member's first
// lh(prefix) entries vs the prefix.
int prefix_order(const Seq& member, const Seq& prefix) {
  for (size_t i = 0; i < prefix.length(); ++i) {
    if (member.at(i) != prefix.at(i)) {
      return member.at(i) < prefix.at(i) ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace

TreeTruncation TreeTruncation::validate(std::vector<Seq> nodes,
                                        uint32_t horizon, Alphabet alphabet) {
  std::sort(nodes.begin(), nodes.end(), shortlex_less);
  for (size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i] == nodes[i - 1]) {
      fail(ErrorKind::kParse,
           "duplicate-node: " + node_text(nodes[i], alphabet));
    }
  }
  if (nodes.empty() || !nodes.front().empty()) {
    fail(ErrorKind::kParse, "missing-root");
  }

  std::set<Seq, ShortlexLess> present(nodes.begin(), nodes.end());
  std::optional<uint32_t> bound = symbol_bound(alphabet);
  uint32_t max_entry = 0;
  for (const Seq& node : nodes) {
    if (node.length() > horizon) {
      fail(ErrorKind::kParse,
           "horizon-exceeded: " + node_text(node, alphabet));
    }
    for (uint32_t e : node.entries()) {
      if (bound && e >= *bound) {
        fail(ErrorKind::kParse,
             "alphabet-violation: " + node_text(node, alphabet));
      }
      max_entry = std::max(max_entry, e);
    }
    if (!node.empty() && !present.count(node.parent())) {
      fail(ErrorKind::kParse,
           "not-prefix-closed: " + node_text(node, alphabet));
    }
  }

  TreeTruncation t;
  t.alphabet_ = alphabet;
  t.horizon_ = horizon;
  t.max_entry_ = max_entry;
  t.node_count_ = nodes.size();
  t.levels_.resize(horizon + 1);
  for (Seq& node : nodes) {
    t.levels_[node.length()].push_back(std::move(node));
  }
  return t;
}

uint32_t TreeTruncation::deepest() const {
  for (uint32_t n = horizon_ + 1; n-- > 0;) {
    if (!levels_[n].empty()) return n;
  }
  return 0;
}

bool TreeTruncation::contains(const Seq& s) const {
  if (s.length() > horizon_) return false;
  const auto& lvl = levels_[s.length()];
  return std::binary_search(lvl.begin(), lvl.end(), s, pointwise_less);
}

const std::vector<Seq>& TreeTruncation::level(uint32_t n) const {
  return levels_[n];
}

bool TreeTruncation::has_extension_at(const Seq& s, uint32_t depth) const {
  if (depth < s.length() || depth > horizon_) return false;
  const auto& lvl = levels_[depth];
  auto it = std::lower_bound(
      lvl.begin(), lvl.end(), s,
      [](const Seq& member, const Seq& p) { return prefix_order(member, p) < 0; });
  return it != lvl.end() && s.is_prefix_of(*it);
}

bool TreeTruncation::survives(const Seq& s, uint32_t lookahead) const {
  if (!contains(s)) return false;
  if (lookahead == 0) return true;
  return has_extension_at(s, static_cast<uint32_t>(s.length()) + lookahead);
}

std::vector<Seq> TreeTruncation::children(const Seq& s) const {
  std::vector<Seq> out;
  uint32_t depth = static_cast<uint32_t>(s.length()) + 1;
  if (depth > horizon_) return out;
  const auto& lvl = levels_[depth];
  auto it = std::lower_bound(
      lvl.begin(), lvl.end(), s,
      [](const Seq& member, const Seq& p) { return prefix_order(member, p) < 0; });
  for (; it != lvl.end() && s.is_prefix_of(*it); ++it) out.push_back(*it);
  return out;
}

std::vector<Seq> TreeTruncation::all_nodes() const {
  std::vector<Seq> out;
  out.reserve(node_count_);
  for (const auto& lvl : levels_) {
    out.insert(out.end(), lvl.begin(), lvl.end());
  }
  return out;
}

std::vector<Seq> level_set(const TreeTruncation& t, uint32_t n) {
  if (n > t.horizon()) {
    fail(ErrorKind::kUsage, "level-beyond-horizon: n=" + std::to_string(n));
  }
  return t.level(n);
}

std::vector<Seq> lookahead_extendible(const TreeTruncation& t, uint32_t n,
                                      uint32_t s) {
  if (n + s > t.horizon()) {
    fail(ErrorKind::kUsage, "lookahead-beyond-horizon: n=" +
                                std::to_string(n) + " s=" + std::to_string(s));
  }
  std::vector<Seq> out;
  for (const Seq& node : t.level(n)) {
    if (s == 0 || t.has_extension_at(node, n + s)) out.push_back(node);
  }
  return out;
}

bool is_path_prefix(const TreeTruncation& t, const Seq& s) {
  return t.contains(s);
}

namespace {

// Per-level leaf counts of every subtree, aligned with the level vectors.
// leaf_counts[n][i] realizes the recurrence f(node) = max(1, sum over
// children of f); with every node present that is the subtree leaf count.
std::vector<std::vector<size_t>> subtree_leaf_counts(const TreeTruncation& t) {
  uint32_t deepest = t.deepest();
  std::vector<std::vector<size_t>> counts(deepest + 1);
  for (uint32_t n = deepest + 1; n-- > 0;) {
    const auto& lvl = t.level(n);
    counts[n].assign(lvl.size(), 0);
    for (size_t i = 0; i < lvl.size(); ++i) {
      size_t sum = 0;
      if (n < deepest) {
        const auto& below = t.level(n + 1);
        auto it = std::lower_bound(below.begin(), below.end(), lvl[i],
                                   [](const Seq& member, const Seq& p) {
                                     return prefix_order(member, p) < 0;
                                   });
        for (; it != below.end() && lvl[i].is_prefix_of(*it); ++it) {
          sum += counts[n + 1][static_cast<size_t>(it - below.begin())];
        }
      }
      counts[n][i] = std::max<size_t>(1, sum);
    }
  }
  return counts;
}

}  // namespace

AntichainResult max_antichain(const TreeTruncation& t) {
  auto counts = subtree_leaf_counts(t);
  AntichainResult result;
  result.size = counts[0][0];
  // The lexicographically least maximum antichain: any maximum antichain
  // has one member per leaf, each with a single-leaf subtree, so the least
  // choice is the shallowest such node above every leaf.
  std::set<Seq, ShortlexLess> chosen;
  for (uint32_t n = 0; n < counts.size(); ++n) {
    const auto& lvl = t.level(n);
    for (size_t i = 0; i < lvl.size(); ++i) {
      if (counts[n][i] != 1) continue;
      bool covered = false;
      for (size_t len = 0; len < lvl[i].length() && !covered; ++len) {
        covered = chosen.count(lvl[i].prefix(len)) != 0;
      }
      if (!covered) chosen.insert(lvl[i]);
    }
  }
  result.witness.assign(chosen.begin(), chosen.end());
  return result;
}

WidthReport width_profile(const TreeTruncation& t,
                          const std::vector<uint32_t>& lookaheads) {
  WidthReport report;
  for (uint32_t n = 0; n <= t.horizon(); ++n) {
    LevelWidths lw;
    lw.level = n;
    lw.level_width = t.level(n).size();
    for (uint32_t s : lookaheads) {
      if (n + s > t.horizon()) {
        lw.ext_widths.emplace_back(s, std::nullopt);
      } else {
        lw.ext_widths.emplace_back(s, lookahead_extendible(t, n, s).size());
      }
    }
    report.levels.push_back(std::move(lw));
  }
  AntichainResult ac = max_antichain(t);
  report.max_antichain_size = ac.size;
  report.antichain_witness = std::move(ac.witness);
  return report;
}

VsmallResult vsmall_check(const TreeTruncation& t, const FunctionTable& f,
                          uint32_t start_bound) {
  VsmallResult result;
  for (uint32_t m = 0; m < f.domain_horizon(); ++m) {
    uint32_t level = f.at(m);
    if (level > t.horizon()) continue;
    VsmallRow row;
    row.m = m;
    row.level = level;
    row.lookahead = t.horizon() - level;
    row.width = lookahead_extendible(t, level, row.lookahead).size();
    row.violates = row.width >= m;
    result.rows.push_back(row);
  }
  if (result.rows.empty()) {
    fail(ErrorKind::kUsage, "range-empty");
  }
  uint32_t needed = 0;  // least n with no violating m >= n
  for (const VsmallRow& row : result.rows) {
    if (row.violates) needed = std::max(needed, row.m + 1);
  }
  if (needed <= start_bound) {
    result.pass = true;
    result.witness_n = needed;
  } else {
    result.pass = false;
    for (const VsmallRow& row : result.rows) {
      if (row.violates && row.m >= start_bound) {
        result.violating = row.m;
        break;
      }
    }
  }
  return result;
}

}  // namespace wkl

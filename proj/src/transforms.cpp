#include "transforms.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "error.hpp"

namespace wkl {

TreeTruncation hat_interpret(const EnumeratedTree& e, uint32_t depth) {
  std::vector<std::vector<uint32_t>> by_len(depth);
  for (uint32_t i = 0; i < e.enumeration_size(); ++i) {
    size_t l = e.enumerated(i).length();
    if (l < depth) by_len[l].push_back(i);
  }
  if (depth >= 1 && by_len[depth - 1].empty()) {
    fail(ErrorKind::kUsage,
         "depth-unrealizable: no enumerated string of length " +
             std::to_string(depth - 1));
  }

  std::vector<Seq> nodes;
  nodes.emplace_back();
  std::vector<Seq> frontier = {Seq()};
  for (uint32_t l = 0; l < depth; ++l) {
    std::vector<Seq> next;
    for (const Seq& tau : frontier) {
      for (uint32_t j : by_len[l]) {
        if (tau.empty() ||
            e.enumerated(tau.back()).is_prefix_of(e.enumerated(j))) {
          next.push_back(tau.extended(j));
        }
      }
    }
    nodes.insert(nodes.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return TreeTruncation::validate(std::move(nodes), depth, Alphabet::kNat);
}

Seq project_hat_path(const EnumeratedTree& e, const Seq& tau) {
  for (size_t i = 0; i < tau.length(); ++i) {
    uint32_t j = tau.at(i);
    bool ok = j < e.enumeration_size() && e.enumerated(j).length() == i;
    if (ok && i > 0) {
      ok = e.enumerated(tau.at(i - 1)).is_prefix_of(e.enumerated(j));
    }
    if (!ok) {
      fail(ErrorKind::kUsage,
           "not-in-hat-tree: " + render_seq(tau, Alphabet::kNat));
    }
  }
  return tau.empty() ? Seq() : e.enumerated(tau.back());
}

EnumeratedTree unique_path_tree(const PredicateTable& theta,
                                uint32_t horizon) {
  if (theta.i_horizon() < horizon) {
    fail(ErrorKind::kUsage,
         "table-horizon-insufficient: i horizon " +
             std::to_string(theta.i_horizon()) + " below tree horizon " +
             std::to_string(horizon));
  }
  std::vector<uint32_t> first_true(horizon, UINT32_MAX);
  for (const auto& [m, i] : theta.true_pairs()) {
    if (i < horizon) first_true[i] = std::min(first_true[i], m);
  }

  uint32_t stages_max = std::max(theta.stabilization_bound(), horizon + 1);
  std::set<Seq, ShortlexLess> seen;
  std::vector<EnumeratedTree::Entry> entries;
  for (uint32_t m = 1; m <= stages_max; ++m) {
    uint32_t len = std::min(m - 1, horizon);
    Seq cur;
    for (uint32_t l = 0; l <= len; ++l) {
      if (l > 0) cur = cur.extended(first_true[l - 1] < m ? 1 : 0);
      if (seen.insert(cur).second) entries.push_back({m, cur});
    }
  }
  return EnumeratedTree::create(std::move(entries), horizon,
                                Alphabet::kBinary);
}

namespace {

size_t width_at(const TreeTruncation& t, uint32_t n, uint32_t s) {
  return lookahead_extendible(t, n, s).size();
}

}  // namespace

PaddingResult pad_to_narrow(const TreeTruncation& t, uint32_t c,
                            std::optional<uint32_t> max_levels) {
  if (t.alphabet() != Alphabet::kBinary) {
    fail(ErrorKind::kUsage, "pad-requires-binary-tree");
  }
  if (c == 0) fail(ErrorKind::kBound, "invalid-bound: c=0");
  if (max_levels && *max_levels == 0) {
    fail(ErrorKind::kUsage, "invalid-levels: 0");
  }
  const uint32_t horizon = t.horizon();

  // Greedy schedule: s_n is the least lookahead past s_{n-1} narrowing
  // level n to width <= c within the horizon.
  std::vector<uint32_t> entries;
  uint32_t prev = 0;
  auto next_entry = [&](uint32_t n) -> std::optional<uint32_t> {
    for (uint32_t s = prev + 1; n + s <= horizon; ++s) {
      if (width_at(t, n, s) <= c) return s;
    }
    return std::nullopt;
  };
  if (max_levels) {
    for (uint32_t n = 0; n < *max_levels; ++n) {
      auto s = next_entry(n);
      if (!s) {
        fail(ErrorKind::kBound,
             "bound-not-achievable: level=" + std::to_string(n));
      }
      entries.push_back(*s);
      prev = *s;
    }
  } else {
    for (uint32_t n = 0;; ++n) {
      auto s = next_entry(n);
      if (!s) break;
      entries.push_back(*s);
      prev = *s;
    }
    if (entries.empty()) {
      fail(ErrorKind::kBound, "bound-not-achievable: level=0");
    }
  }

  // The deepest symbol layer (stripped length = schedule size) sits past
  // the last scheduled entry; when no lookahead past it fits the horizon,
  // survival to the horizon itself governs.
  uint32_t m = static_cast<uint32_t>(entries.size());
  auto top_for = [&](uint32_t sym_len, uint32_t after) -> std::optional<uint32_t> {
    for (uint32_t s = after + 1; sym_len + s <= horizon; ++s) {
      if (width_at(t, sym_len, s) <= c) return s;
    }
    if (sym_len <= horizon) {
      uint32_t s = horizon - sym_len;
      if (s <= after && width_at(t, sym_len, s) <= c) return s;
    }
    return std::nullopt;
  };
  std::optional<uint32_t> top = top_for(m, entries.back());
  if (!top) {
    if (max_levels) {
      fail(ErrorKind::kBound,
           "bound-not-achievable: level=" + std::to_string(m));
    }
    // Auto mode narrows gracefully: the dropped entry's lookahead already
    // bounds the new top layer.
    top = entries.back();
    entries.pop_back();
    m -= 1;
    if (m == 0) {
      fail(ErrorKind::kBound, "bound-not-achievable: level=1");
    }
  }

  // Governing node sets per stripped length.
  std::vector<std::vector<Seq>> gov(m + 1);
  for (uint32_t k = 0; k < m; ++k) {
    gov[k] = lookahead_extendible(t, k, entries[k]);
  }
  gov[m] = lookahead_extendible(t, m, *top);

  uint32_t lmax = entries.back() + 1;
  std::vector<Seq> nodes;
  for (uint32_t len = 0; len <= lmax; ++len) {
    size_t k = static_cast<size_t>(
        std::lower_bound(entries.begin(), entries.end(), len) -
        entries.begin());
    for (const Seq& g : gov[k]) {
      std::vector<uint32_t> tau(len, 2);
      for (size_t n = 0; n < k; ++n) tau[entries[n]] = g.at(n);
      nodes.emplace_back(std::move(tau));
    }
  }

  PaddingResult result{
      TreeTruncation::validate(std::move(nodes), lmax, Alphabet::kTernary),
      PaddingSchedule{c, entries, horizon, *top}};
  return result;
}

Seq strip_twos(const Seq& s) {
  std::vector<uint32_t> kept;
  for (uint32_t e : s.entries()) {
    if (e != 2) kept.push_back(e);
  }
  return Seq(std::move(kept));
}

Seq leftmost_maximal_branch(const TreeTruncation& t) {
  return t.level(t.deepest()).front();
}

EnumeratedTree cex_prefix_free(const FunctionTable& h, uint32_t horizon) {
  if (horizon == 0) fail(ErrorKind::kUsage, "horizon-zero");
  if (h.domain_horizon() < horizon) {
    fail(ErrorKind::kUsage,
         "table-domain-insufficient: domain " +
             std::to_string(h.domain_horizon()) + " below horizon " +
             std::to_string(horizon));
  }
  std::set<Seq, ShortlexLess> seen;
  std::vector<EnumeratedTree::Entry> entries;
  uint32_t max_len = 0;
  for (uint32_t n = 0; n < horizon; ++n) {
    uint32_t x = h.at(n);
    Seq cur;
    auto emit = [&](const Seq& s) {
      if (seen.insert(s).second) entries.push_back({n, s});
    };
    emit(cur);
    for (uint32_t j = 0; j < x; ++j) {
      cur = cur.extended(1);
      emit(cur);
    }
    for (uint32_t y = 0; y < n; ++y) {
      cur = cur.extended(0);
      emit(cur);
    }
    max_len = std::max(max_len, x + n);
  }
  return EnumeratedTree::create(std::move(entries), max_len,
                                Alphabet::kBinary);
}

EnumeratedTree cex_level_width(const PredicateTable& theta, uint32_t c,
                               uint32_t horizon) {
  if (c == 0) fail(ErrorKind::kBound, "invalid-bound: c=0");
  if (theta.i_horizon() < horizon) {
    fail(ErrorKind::kUsage,
         "table-horizon-insufficient: i horizon " +
             std::to_string(theta.i_horizon()) + " below tree horizon " +
             std::to_string(horizon));
  }
  // Least refuting stage per position; the table is the relativization, so
  // theta reads true past its m horizon and a position with no false entry
  // survives every stage.
  std::vector<uint32_t> first_false(horizon, UINT32_MAX);
  for (uint32_t i = 0; i < horizon; ++i) {
    for (uint32_t mp = 0; mp < theta.m_horizon(); ++mp) {
      if (!theta.holds(mp, i)) {
        first_false[i] = mp;
        break;
      }
    }
  }

  uint32_t stages_max = std::max(theta.m_horizon(), horizon + 1);
  std::set<Seq, ShortlexLess> seen;
  std::vector<EnumeratedTree::Entry> entries;
  for (uint32_t m = 1; m <= stages_max; ++m) {
    uint32_t len = std::min(m - 1, horizon);
    Seq cur;
    uint32_t ones = 0;
    for (uint32_t l = 0; l <= len; ++l) {
      if (l > 0) {
        uint32_t bit = first_false[l - 1] >= m ? 1 : 0;
        ones += bit;
        if (ones > c) break;
        cur = cur.extended(bit);
      }
      if (seen.insert(cur).second) entries.push_back({m, cur});
    }
  }
  return EnumeratedTree::create(std::move(entries), horizon,
                                Alphabet::kBinary);
}

}  // namespace wkl

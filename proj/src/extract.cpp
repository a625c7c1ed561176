#include "extract.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace wkl {

namespace {

void require_window(const TreeTruncation& t, uint32_t target_len, uint32_t s) {
  if (target_len + s > t.horizon()) {
    fail(ErrorKind::kUsage,
         "lookahead-beyond-horizon: len=" + std::to_string(target_len) +
             " s=" + std::to_string(s) +
             " horizon=" + std::to_string(t.horizon()));
  }
}

void require_bound(uint32_t c) {
  if (c == 0) fail(ErrorKind::kBound, "invalid-bound: c=0");
}

}  // namespace

PathPrefix follow_unique_extensions(const TreeTruncation& t, const Seq& start,
                                    uint32_t target_len, uint32_t s) {
  if (!t.contains(start)) {
    fail(ErrorKind::kUsage,
         "start-not-in-tree: " + render_seq(start, t.alphabet()));
  }
  if (start.length() > target_len) {
    fail(ErrorKind::kUsage,
         "target-below-start: len=" + std::to_string(target_len));
  }
  require_window(t, target_len, s);

  Seq cur = start;
  while (cur.length() < target_len) {
    Seq unique;
    size_t surviving = 0;
    for (const Seq& child : t.children(cur)) {
      if (t.survives(child, s)) {
        ++surviving;
        unique = child;
      }
    }
    if (surviving == 0) break;
    if (surviving > 1) {
      fail(ErrorKind::kBound,
           "non-unique-extension: node=" + render_seq(cur, t.alphabet()) +
               " lookahead=" + std::to_string(s));
    }
    cur = unique;
  }
  PathPrefix pp;
  pp.requested = target_len;
  pp.achieved = static_cast<uint32_t>(cur.length());
  pp.lookahead = s;
  pp.path = std::move(cur);
  return pp;
}

std::pair<PathPrefix, PfCertificate> extract_pf_bounded(
    const TreeTruncation& t, uint32_t c, uint32_t target_len, uint32_t s) {
  require_bound(c);
  require_window(t, target_len, s);

  AntichainResult ac = max_antichain(t);
  if (ac.size > c) {
    fail(ErrorKind::kBound, "bound-violated: b0=" + std::to_string(ac.size) +
                                " c=" + std::to_string(c));
  }
  PfCertificate cert;
  cert.b0 = ac.size;
  cert.p0 = std::move(ac.witness);

  const uint32_t probe_depth = target_len + s;
  const Seq* pivot = nullptr;
  for (const Seq& member : cert.p0) {
    if (t.has_extension_at(member, probe_depth)) {
      pivot = &member;
      break;
    }
  }
  if (!pivot) {
    fail(ErrorKind::kExtract,
         "no-extendible-pivot: depth=" + std::to_string(probe_depth));
  }
  cert.pivot = *pivot;

  PathPrefix pp;
  if (pivot->length() >= target_len) {
    pp.path = pivot->prefix(target_len);
    pp.requested = target_len;
    pp.achieved = target_len;
    pp.lookahead = s;
  } else {
    pp = follow_unique_extensions(t, *pivot, target_len, s);
  }
  return {std::move(pp), std::move(cert)};
}

std::pair<PathPrefix, ExtCertificate> extract_ext_bounded(
    const TreeTruncation& t, uint32_t c, uint32_t target_len, uint32_t s) {
  require_bound(c);
  require_window(t, target_len, s);

  size_t b0 = 0;
  for (uint32_t n = 0; n <= target_len; ++n) {
    b0 = std::max(b0, lookahead_extendible(t, n, s).size());
  }
  if (b0 == 0) {
    fail(ErrorKind::kExtract,
         "no-extendible-pivot: no node survives lookahead " +
             std::to_string(s));
  }
  if (b0 > c) {
    fail(ErrorKind::kBound, "bound-violated: b0=" + std::to_string(b0) +
                                " c=" + std::to_string(c));
  }

  ExtCertificate cert;
  cert.b0 = b0;
  cert.levels_checked = target_len;
  for (uint32_t n = 0; n <= target_len; ++n) {
    std::vector<Seq> surviving = lookahead_extendible(t, n, s);
    if (surviving.size() == b0) {
      cert.witness_level = n;
      cert.pivot = surviving.front();
      break;
    }
  }
  PathPrefix pp = follow_unique_extensions(t, cert.pivot, target_len, s);
  return {std::move(pp), std::move(cert)};
}

std::pair<PathPrefix, WbdCertificate> extract_w_bounded_kl(
    const TreeTruncation& t, uint32_t c, uint32_t target_len, uint32_t s) {
  require_bound(c);
  require_window(t, target_len, s);

  for (uint32_t n = 0; n <= t.horizon(); ++n) {
    if (t.level(n).size() > c) {
      fail(ErrorKind::kBound,
           "level-width-violated: level=" + std::to_string(n) + " width=" +
               std::to_string(t.level(n).size()) + " c=" + std::to_string(c));
    }
  }

  WbdCertificate cert;
  cert.window_lo = (t.horizon() - s + 1) / 2;
  cert.window_hi = t.horizon() - s;

  size_t b0 = 0;
  for (uint32_t n = cert.window_lo; n <= cert.window_hi; ++n) {
    b0 = std::max(b0, lookahead_extendible(t, n, s).size());
  }
  if (b0 == 0) {
    fail(ErrorKind::kExtract,
         "empty-selection: no node survives in the stable window");
  }
  cert.b0 = b0;
  for (uint32_t n = cert.window_lo; n <= cert.window_hi; ++n) {
    std::vector<Seq> surviving = lookahead_extendible(t, n, s);
    if (surviving.size() == b0) {
      cert.sampled.push_back(n);
      cert.tables.push_back(std::move(surviving));
    }
  }
  if (cert.sampled.back() < target_len) {
    fail(ErrorKind::kExtract,
         "insufficient-stable-levels: deepest=" +
             std::to_string(cert.sampled.back()) +
             " len=" + std::to_string(target_len));
  }

  // Least branch through every sampled level, by backtracking over column
  // indices; the chain condition against the previous pick suffices since
  // the prefix relation is transitive.
  std::vector<uint32_t>& sel = cert.selection;
  auto search = [&](auto&& self, size_t depth) -> bool {
    if (depth == cert.tables.size()) return true;
    for (uint32_t d = 0; d < b0; ++d) {
      if (depth > 0 &&
          !cert.tables[depth - 1][sel.back()].is_prefix_of(
              cert.tables[depth][d])) {
        continue;
      }
      sel.push_back(d);
      if (self(self, depth + 1)) return true;
      sel.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) {
    fail(ErrorKind::kExtract,
         "empty-selection: no chain through the sampled levels");
  }

  PathPrefix pp;
  pp.path = cert.tables.back()[sel.back()].prefix(target_len);
  pp.requested = target_len;
  pp.achieved = target_len;
  pp.lookahead = s;
  return {std::move(pp), std::move(cert)};
}

StabilityReport lookahead_stability(const TreeTruncation& t,
                                    const std::vector<Seq>& nodes,
                                    const std::vector<uint32_t>& lookaheads) {
  uint32_t max_s = 0;
  for (uint32_t s : lookaheads) max_s = std::max(max_s, s);
  StabilityReport report;
  report.lookaheads = lookaheads;
  for (const Seq& node : nodes) {
    if (node.length() + max_s > t.horizon()) {
      fail(ErrorKind::kUsage,
           "lookahead-beyond-horizon: node=" + render_seq(node, t.alphabet()) +
               " s=" + std::to_string(max_s));
    }
    std::vector<bool> row;
    row.reserve(lookaheads.size());
    for (uint32_t s : lookaheads) row.push_back(t.survives(node, s));
    report.rows.emplace_back(node, std::move(row));
  }
  return report;
}

}  // namespace wkl

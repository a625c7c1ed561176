#include "verify.hpp"

#include <algorithm>

namespace wkl {

CheckResult validate_path_prefix(const TreeTruncation& t, const PathPrefix& p) {
  CheckResult r;
  bool members = p.path.length() == p.achieved && p.achieved <= p.requested;
  for (size_t len = 0; len <= p.path.length() && members; ++len) {
    members = t.contains(p.path.prefix(len));
  }
  r.add("path.members", members);
  r.add("path.survival", t.survives(p.path, p.lookahead));
  return r;
}

CheckResult verify_pf_certificate(const TreeTruncation& t,
                                  const PathPrefix& p,
                                  const PfCertificate& cert, uint32_t c) {
  CheckResult r = validate_path_prefix(t, p);

  bool incomparable = true;
  bool members = !cert.p0.empty();
  for (size_t i = 0; i < cert.p0.size(); ++i) {
    members = members && t.contains(cert.p0[i]);
    for (size_t j = i + 1; j < cert.p0.size(); ++j) {
      if (comparable(cert.p0[i], cert.p0[j])) incomparable = false;
    }
  }
  r.add("cert.p0.members", members);
  r.add("cert.p0.incomparable", incomparable);
  r.add("cert.p0.maximal", cert.p0.size() == max_antichain(t).size);
  r.add("cert.b0.size", cert.b0 == cert.p0.size());
  r.add("cert.b0.bound", cert.b0 <= c);
  r.add("cert.pivot.member",
        std::find(cert.p0.begin(), cert.p0.end(), cert.pivot) !=
            cert.p0.end());
  r.add("cert.pivot.path", comparable(cert.pivot, p.path));
  return r;
}

CheckResult verify_ext_certificate(const TreeTruncation& t,
                                   const PathPrefix& p,
                                   const ExtCertificate& cert, uint32_t c) {
  CheckResult r = validate_path_prefix(t, p);

  bool bounded = true;
  for (uint32_t n = 0;
       n <= cert.levels_checked && n + p.lookahead <= t.horizon(); ++n) {
    if (lookahead_extendible(t, n, p.lookahead).size() > cert.b0) {
      bounded = false;
    }
  }
  r.add("cert.widths.bounded", bounded);

  bool attains = false;
  bool pivot_member = false;
  if (cert.witness_level + p.lookahead <= t.horizon()) {
    std::vector<Seq> surviving =
        lookahead_extendible(t, cert.witness_level, p.lookahead);
    attains = surviving.size() == cert.b0;
    pivot_member = std::find(surviving.begin(), surviving.end(),
                             cert.pivot) != surviving.end();
  }
  r.add("cert.witness.attains", attains);
  r.add("cert.b0.bound", cert.b0 <= c);
  r.add("cert.pivot.member", pivot_member);
  r.add("cert.pivot.path", comparable(cert.pivot, p.path));
  return r;
}

CheckResult verify_wbd_certificate(const TreeTruncation& t,
                                   const PathPrefix& p,
                                   const WbdCertificate& cert, uint32_t c) {
  CheckResult r = validate_path_prefix(t, p);

  bool levels_bounded = true;
  for (uint32_t n = 0; n <= t.horizon(); ++n) {
    if (t.level(n).size() > c) levels_bounded = false;
  }
  r.add("cert.levels.bounded", levels_bounded);

  bool tables_match = cert.sampled.size() == cert.tables.size() &&
                      !cert.sampled.empty();
  bool widths_b0 = tables_match;
  for (size_t i = 0; tables_match && i < cert.sampled.size(); ++i) {
    uint32_t n = cert.sampled[i];
    if (n < cert.window_lo || n > cert.window_hi ||
        n + p.lookahead > t.horizon()) {
      tables_match = false;
      break;
    }
    std::vector<Seq> recomputed = lookahead_extendible(t, n, p.lookahead);
    tables_match = recomputed == cert.tables[i];
    widths_b0 = widths_b0 && recomputed.size() == cert.b0;
  }
  r.add("cert.tables.match", tables_match);
  r.add("cert.widths.b0", widths_b0);

  bool chain = cert.selection.size() == cert.tables.size();
  for (size_t i = 0; chain && i < cert.selection.size(); ++i) {
    chain = cert.selection[i] < cert.tables[i].size();
    for (size_t j = i + 1; chain && j < cert.selection.size(); ++j) {
      chain = cert.selection[j] < cert.tables[j].size() &&
              cert.tables[i][cert.selection[i]].is_prefix_of(
                  cert.tables[j][cert.selection[j]]);
    }
  }
  r.add("cert.chain", chain);

  bool selected = chain && !cert.tables.empty() &&
                  cert.tables.back()[cert.selection.back()].length() >=
                      p.path.length() &&
                  p.path.is_prefix_of(
                      cert.tables.back()[cert.selection.back()]);
  r.add("cert.path.selected", selected);
  return r;
}

}  // namespace wkl

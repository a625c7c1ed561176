#include "report_io.hpp"

#include <string>

#include "error.hpp"
#include "verify.hpp"

namespace wkl {

namespace {

void add_tree_header(Report& r, const TreeTruncation& t) {
  r.add("alphabet", alphabet_name(t.alphabet()));
  r.add_num("horizon", t.horizon());
}

std::vector<Seq> parse_seq_fields(const std::string& value, Alphabet a) {
  std::vector<Seq> out;
  for (const std::string& tok : split_fields(value)) {
    out.push_back(parse_seq(tok, a));
  }
  return out;
}

}  // namespace

Report describe_report(const std::string& command, const LoadedTree& t) {
  Report r;
  r.add("report", command);
  add_tree_header(r, t.tree);
  r.add("enumerated", t.is_enumerated() ? "yes" : "no");
  r.add_num("nodes", t.tree.node_count());
  r.add_num("deepest", t.tree.deepest());
  if (t.tree.alphabet() == Alphabet::kNat) {
    r.add_num("branching", static_cast<uint64_t>(t.tree.max_entry()) + 1);
  }
  r.add("valid", "yes");
  return r;
}

Report widths_report(const TreeTruncation& t,
                     const std::vector<uint32_t>& lookaheads) {
  WidthReport w = width_profile(t, lookaheads);
  Report r;
  r.add("report", "widths");
  add_tree_header(r, t);
  r.add_nums("lookaheads", lookaheads);
  for (const LevelWidths& lw : w.levels) {
    std::string value = std::to_string(lw.level);
    value += ' ';
    value += std::to_string(lw.level_width);
    for (const auto& [s, width] : lw.ext_widths) {
      value += ' ';
      value += width ? std::to_string(*width) : std::string("-");
    }
    r.add("level", value);
  }
  r.add_num("antichain", w.max_antichain_size);
  r.add_seqs("witness", w.antichain_witness, t.alphabet());
  return r;
}

Report antichain_report(const TreeTruncation& t) {
  AntichainResult ac = max_antichain(t);
  Report r;
  r.add("report", "antichain");
  add_tree_header(r, t);
  r.add_num("size", ac.size);
  r.add_seqs("witness", ac.witness, t.alphabet());
  return r;
}

Report pad_report(const PaddingResult& padding) {
  Report r;
  r.add("report", "pad");
  add_tree_header(r, padding.narrowed);
  r.add_num("c", padding.schedule.bound_c);
  r.add_num("source.horizon", padding.schedule.source_horizon);
  r.add_num("levels", padding.schedule.entries.size());
  r.add_nums("schedule", padding.schedule.entries);
  r.add_num("top.lookahead", padding.schedule.top_lookahead);
  r.add_num("nodes", padding.narrowed.node_count());
  size_t max_width = 0;
  for (uint32_t n = 0; n <= padding.narrowed.horizon(); ++n) {
    max_width = std::max(max_width, padding.narrowed.level(n).size());
  }
  r.add_num("maxwidth", max_width);
  return r;
}

Report extract_report(const std::string& variant, const TreeTruncation& t,
                      uint32_t c, const PathPrefix& path,
                      const PfCertificate* pf, const ExtCertificate* ext,
                      const WbdCertificate* wbd) {
  Report r;
  r.add("report", "extract");
  r.add("variant", variant);
  add_tree_header(r, t);
  r.add_num("c", c);
  r.add_num("len", path.requested);
  r.add_num("lookahead", path.lookahead);
  r.add("status", "ok");
  r.add_num("requested", path.requested);
  r.add_num("achieved", path.achieved);
  r.add_seq("path", path.path, t.alphabet());
  if (pf) {
    r.add_num("b0", pf->b0);
    r.add_seqs("p0", pf->p0, t.alphabet());
    r.add_seq("pivot", pf->pivot, t.alphabet());
  }
  if (ext) {
    r.add_num("b0", ext->b0);
    r.add_num("levels.checked", ext->levels_checked);
    r.add_num("witness.level", ext->witness_level);
    r.add_seq("pivot", ext->pivot, t.alphabet());
  }
  if (wbd) {
    r.add_num("b0", wbd->b0);
    r.add("window", std::to_string(wbd->window_lo) + " " +
                        std::to_string(wbd->window_hi));
    r.add_nums("sampled", wbd->sampled);
    for (size_t i = 0; i < wbd->sampled.size(); ++i) {
      std::string value = std::to_string(wbd->sampled[i]);
      for (const Seq& s : wbd->tables[i]) {
        value += ' ';
        value += render_seq(s, t.alphabet());
      }
      r.add("table", value);
    }
    r.add_nums("selection", wbd->selection);
  }
  return r;
}

Report stability_report(const TreeTruncation& t, const StabilityReport& s) {
  Report r;
  r.add("report", "stability");
  add_tree_header(r, t);
  r.add_nums("lookaheads", s.lookaheads);
  for (const auto& [node, row] : s.rows) {
    std::string value = render_seq(node, t.alphabet());
    for (bool survives : row) {
      value += survives ? " yes" : " no";
    }
    r.add("node", value);
  }
  return r;
}

Report vsmall_report(const TreeTruncation& t, uint32_t start_bound,
                     const VsmallResult& result) {
  Report r;
  r.add("report", "vsmall");
  add_tree_header(r, t);
  r.add_num("start", start_bound);
  r.add_num("checked", result.rows.size());
  for (const VsmallRow& row : result.rows) {
    std::string value = std::to_string(row.m);
    value += ' ' + std::to_string(row.level);
    value += ' ' + std::to_string(row.lookahead);
    value += ' ' + std::to_string(row.width);
    value += row.violates ? " viol" : " ok";
    r.add("row", value);
  }
  r.add("result", result.pass ? "pass" : "fail");
  if (result.pass) {
    r.add_num("witness", result.witness_n);
  } else if (result.violating) {
    r.add_num("violating", *result.violating);
  }
  return r;
}

VerifyOutcome verify_extract_report(const Report& claimed,
                                    const TreeTruncation& t) {
  if (claimed.need("report") != "extract") {
    fail(ErrorKind::kParse, "report-not-extract");
  }
  std::string variant = claimed.need("variant");
  Alphabet alphabet = t.alphabet();

  CheckResult checks;
  bool header_match =
      claimed.need("alphabet") == alphabet_name(alphabet) &&
      claimed.need_num("horizon") == t.horizon();
  checks.add("tree.match", header_match);

  uint32_t c = static_cast<uint32_t>(claimed.need_num("c"));
  PathPrefix path;
  path.requested = static_cast<uint32_t>(claimed.need_num("requested"));
  path.achieved = static_cast<uint32_t>(claimed.need_num("achieved"));
  path.lookahead = static_cast<uint32_t>(claimed.need_num("lookahead"));
  path.path = parse_seq(claimed.need("path"), alphabet);

  if (header_match) {
    if (variant == "pf") {
      PfCertificate cert;
      cert.b0 = claimed.need_num("b0");
      cert.p0 = parse_seq_fields(claimed.need("p0"), alphabet);
      cert.pivot = parse_seq(claimed.need("pivot"), alphabet);
      checks.append(verify_pf_certificate(t, path, cert, c));
    } else if (variant == "ext") {
      ExtCertificate cert;
      cert.b0 = claimed.need_num("b0");
      cert.levels_checked =
          static_cast<uint32_t>(claimed.need_num("levels.checked"));
      cert.witness_level =
          static_cast<uint32_t>(claimed.need_num("witness.level"));
      cert.pivot = parse_seq(claimed.need("pivot"), alphabet);
      checks.append(verify_ext_certificate(t, path, cert, c));
    } else if (variant == "wbd") {
      WbdCertificate cert;
      cert.b0 = claimed.need_num("b0");
      auto window = split_fields(claimed.need("window"));
      if (window.size() != 2) fail(ErrorKind::kParse, "report-bad-window");
      cert.window_lo = static_cast<uint32_t>(std::stoul(window[0]));
      cert.window_hi = static_cast<uint32_t>(std::stoul(window[1]));
      for (const std::string& tok : split_fields(claimed.need("sampled"))) {
        cert.sampled.push_back(static_cast<uint32_t>(std::stoul(tok)));
      }
      for (const std::string& line : claimed.all("table")) {
        auto fields = split_fields(line);
        if (fields.empty()) fail(ErrorKind::kParse, "report-bad-table");
        std::vector<Seq> row;
        for (size_t i = 1; i < fields.size(); ++i) {
          row.push_back(parse_seq(fields[i], alphabet));
        }
        cert.tables.push_back(std::move(row));
      }
      for (const std::string& tok : split_fields(claimed.need("selection"))) {
        cert.selection.push_back(static_cast<uint32_t>(std::stoul(tok)));
      }
      checks.append(verify_wbd_certificate(t, path, cert, c));
    } else {
      fail(ErrorKind::kParse, "report-bad-variant: " + variant);
    }
  }

  VerifyOutcome outcome;
  outcome.report.add("report", "verify");
  outcome.report.add("variant", variant);
  outcome.report.add("alphabet", alphabet_name(alphabet));
  outcome.report.add_num("horizon", t.horizon());
  for (const auto& [name, passed] : checks.checks) {
    outcome.report.add("check", name + (passed ? " yes" : " no"));
  }
  outcome.pass = checks.ok();
  outcome.report.add("verdict", outcome.pass ? "pass" : "fail");
  return outcome;
}

}  // namespace wkl

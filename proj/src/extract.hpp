#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seq.hpp"
#include "tree.hpp"

namespace wkl {

// A finite approximation of a path: every prefix lies in the source tree
// and the endpoint survives the recorded lookahead. achieved < requested
// records that the walk stalled inside the horizon.
struct PathPrefix {
  Seq path;
  uint32_t requested = 0;
  uint32_t achieved = 0;
  uint32_t lookahead = 0;
};

// Witnesses from the prefix-free-bounded argument: a maximum antichain and
// the member the path grows from.
struct PfCertificate {
  size_t b0 = 0;
  std::vector<Seq> p0;  // shortlex order
  Seq pivot;
};

// Witnesses from the extendible-width argument: the least uniform width
// bound over the checked levels and the first level attaining it.
struct ExtCertificate {
  size_t b0 = 0;
  uint32_t witness_level = 0;
  Seq pivot;
  uint32_t levels_checked = 0;
};

// Witnesses from the level-width argument: the stable window, the sampled
// levels of width exactly b0, their left-most-ordered member tables, and
// the selected column chain.
struct WbdCertificate {
  size_t b0 = 0;
  uint32_t window_lo = 0;
  uint32_t window_hi = 0;
  std::vector<uint32_t> sampled;
  std::vector<std::vector<Seq>> tables;
  std::vector<uint32_t> selection;
};

// Walks from start appending the unique child surviving lookahead s, up to
// target_len. Two surviving children mean the uniqueness hypothesis fails
// at this lookahead and is an error; no surviving child stops the walk.
PathPrefix follow_unique_extensions(const TreeTruncation& t, const Seq& start,
                                    uint32_t target_len, uint32_t s);

// Path extraction under a prefix-free bound c: picks the left-most member
// of the least maximum antichain having an extension at depth
// target_len + s, then follows unique surviving extensions.
std::pair<PathPrefix, PfCertificate> extract_pf_bounded(
    const TreeTruncation& t, uint32_t c, uint32_t target_len, uint32_t s);

// Path extraction under an extendible-width bound c: finds the least
// uniform lookahead width bound b0 over levels up to target_len, starts at
// the left-most member of the first level attaining it.
std::pair<PathPrefix, ExtCertificate> extract_ext_bounded(
    const TreeTruncation& t, uint32_t c, uint32_t target_len, uint32_t s);

// Path extraction under a raw level-width bound c: samples the stable
// upper window of levels, builds the selection tree over columns of the
// sampled left-most tables, and takes its least full-depth branch.
std::pair<PathPrefix, WbdCertificate> extract_w_bounded_kl(
    const TreeTruncation& t, uint32_t c, uint32_t target_len, uint32_t s);

struct StabilityReport {
  std::vector<uint32_t> lookaheads;
  std::vector<std::pair<Seq, std::vector<bool>>> rows;
};

// Survival matrix of the given nodes across lookaheads; survival is
// monotone non-increasing along each row.
StabilityReport lookahead_stability(const TreeTruncation& t,
                                    const std::vector<Seq>& nodes,
                                    const std::vector<uint32_t>& lookaheads);

}  // namespace wkl

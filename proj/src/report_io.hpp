#pragma once

#include <string>
#include <vector>

#include "extract.hpp"
#include "formats.hpp"
#include "report.hpp"
#include "transforms.hpp"
#include "tree.hpp"

namespace wkl {

// Report builders for each command surface. Key order is fixed so reports
// are byte-identical across runs.

Report describe_report(const std::string& command, const LoadedTree& t);

Report widths_report(const TreeTruncation& t,
                     const std::vector<uint32_t>& lookaheads);

Report antichain_report(const TreeTruncation& t);

Report pad_report(const PaddingResult& padding);

Report extract_report(const std::string& variant, const TreeTruncation& t,
                      uint32_t c, const PathPrefix& path,
                      const PfCertificate* pf, const ExtCertificate* ext,
                      const WbdCertificate* wbd);

Report stability_report(const TreeTruncation& t, const StabilityReport& s);

Report vsmall_report(const TreeTruncation& t, uint32_t start_bound,
                     const VsmallResult& result);

// Re-verifies a serialized extract report against a tree: parses the
// claimed path and certificate, re-derives every certificate invariant,
// and returns the check-by-check verdict report.
struct VerifyOutcome {
  Report report;
  bool pass = false;
};
VerifyOutcome verify_extract_report(const Report& claimed,
                                    const TreeTruncation& t);

}  // namespace wkl

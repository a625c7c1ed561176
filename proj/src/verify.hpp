#pragma once

#include <string>
#include <utility>
#include <vector>

#include "extract.hpp"
#include "tree.hpp"

namespace wkl {

// Outcome of re-checking a path or certificate claim by claim. Checks are
// re-derived from the tree and the claimed witnesses, never read back from
// the extractor's internal state.
struct CheckResult {
  std::vector<std::pair<std::string, bool>> checks;

  bool ok() const {
    for (const auto& [name, passed] : checks) {
      if (!passed) return false;
    }
    return true;
  }

  void add(std::string name, bool passed) {
    checks.emplace_back(std::move(name), passed);
  }

  void append(const CheckResult& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

// Membership of every prefix plus an endpoint survival re-scan.
CheckResult validate_path_prefix(const TreeTruncation& t, const PathPrefix& p);

CheckResult verify_pf_certificate(const TreeTruncation& t,
                                  const PathPrefix& p,
                                  const PfCertificate& cert, uint32_t c);

CheckResult verify_ext_certificate(const TreeTruncation& t,
                                   const PathPrefix& p,
                                   const ExtCertificate& cert, uint32_t c);

CheckResult verify_wbd_certificate(const TreeTruncation& t,
                                   const PathPrefix& p,
                                   const WbdCertificate& cert, uint32_t c);

}  // namespace wkl

#include "extract.hpp"

#include <functional>

#include "doctest.h"
#include "error.hpp"
#include "gen.hpp"
#include "report_io.hpp"
#include "test_support.hpp"
#include "transforms.hpp"
#include "verify.hpp"

using namespace wkl;
using namespace wkl::test;

namespace {

bool fails_with(ErrorKind kind, const std::string& tag,
                const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind && std::string(e.what()).starts_with(tag);
  }
  return false;
}

PredicateTable stepped_theta() {
  return PredicateTable({{3, 0}, {5, 2}, {7, 4}}, 8, 8);
}

}  // namespace

TEST_CASE("follow_unique_extensions walks the comb spine") {
  PathPrefix p = follow_unique_extensions(gen_comb(6), seq({}), 3, 2);
  CHECK(p.path == seq({0, 0, 0}));
  CHECK(p.achieved == 3);
  CHECK(p.requested == 3);
}

TEST_CASE("follow_unique_extensions walks a chain") {
  PathPrefix p = follow_unique_extensions(chain(1, 5), seq({}), 4, 1);
  CHECK(p.path == repeated(1, 4));
}

TEST_CASE("follow_unique_extensions refuses a fork") {
  CHECK(fails_with(ErrorKind::kBound, "non-unique-extension: node=- lookahead=3",
                   [] {
                     follow_unique_extensions(gen_twochain(6), seq({}), 3, 3);
                   }));
  CHECK(fails_with(ErrorKind::kUsage, "start-not-in-tree", [] {
    follow_unique_extensions(gen_comb(6), seq({1, 1}), 3, 1);
  }));
}

TEST_CASE("extract_pf_bounded on the twochain") {
  auto [path, cert] = extract_pf_bounded(gen_twochain(6), 2, 4, 2);
  CHECK(path.path == repeated(0, 4));
  CHECK(path.achieved == 4);
  CHECK(cert.b0 == 2);
  CHECK(cert.p0 == std::vector<Seq>{seq({0}), seq({1})});
  CHECK(cert.pivot == seq({0}));
}

TEST_CASE("extract_pf_bounded on a chain") {
  auto [path, cert] = extract_pf_bounded(chain(0, 5), 1, 5, 0);
  CHECK(path.path == repeated(0, 5));
  CHECK(cert.b0 == 1);
  CHECK(cert.p0 == std::vector<Seq>{seq({})});
}

TEST_CASE("extract_pf_bounded detects bound violations") {
  CHECK(fails_with(ErrorKind::kBound, "bound-violated: b0=7 c=2",
                   [] { extract_pf_bounded(gen_comb(6), 2, 3, 2); }));
  CHECK(fails_with(ErrorKind::kBound, "invalid-bound",
                   [] { extract_pf_bounded(gen_comb(6), 0, 3, 2); }));
}

TEST_CASE("extract_ext_bounded on the comb") {
  auto [path, cert] = extract_ext_bounded(gen_comb(6), 1, 3, 3);
  CHECK(path.path == repeated(0, 3));
  CHECK(cert.b0 == 1);
  CHECK(cert.witness_level == 0);
}

TEST_CASE("extract_ext_bounded on the twochain") {
  auto [path, cert] = extract_ext_bounded(gen_twochain(6), 2, 3, 3);
  CHECK(cert.b0 == 2);
  CHECK(cert.witness_level == 1);
  CHECK(cert.pivot == seq({0}));
  CHECK(path.path == repeated(0, 3));
}

TEST_CASE("extract_ext_bounded rejects a zero bound") {
  CHECK(fails_with(ErrorKind::kBound, "invalid-bound",
                   [] { extract_ext_bounded(gen_twochain(6), 0, 3, 3); }));
}

TEST_CASE("extract_w_bounded_kl on the twochain") {
  auto [path, cert] = extract_w_bounded_kl(gen_twochain(6), 2, 3, 3);
  CHECK(cert.b0 == 2);
  CHECK(cert.sampled == std::vector<uint32_t>{2, 3});
  REQUIRE(cert.tables.size() == 2);
  CHECK(cert.tables[0] == std::vector<Seq>{seq({0, 0}), seq({1, 1})});
  CHECK(cert.tables[1] ==
        std::vector<Seq>{seq({0, 0, 0}), seq({1, 1, 1})});
  CHECK(cert.selection == std::vector<uint32_t>{0, 0});
  CHECK(path.path == repeated(0, 3));
}

TEST_CASE("extract_w_bounded_kl on a width-one chain") {
  auto [path, cert] = extract_w_bounded_kl(chain(0, 6), 1, 3, 3);
  CHECK(cert.b0 == 1);
  CHECK(cert.selection == std::vector<uint32_t>{0, 0});
  CHECK(path.path == repeated(0, 3));
}

TEST_CASE("extract_w_bounded_kl rejects wide levels") {
  CHECK(fails_with(ErrorKind::kBound, "level-width-violated: level=2",
                   [] { extract_w_bounded_kl(gen_fullbinary(6), 2, 3, 2); }));
}

TEST_CASE("extractors are deterministic") {
  TreeTruncation two = gen_twochain(6);
  Report first = extract_report(
      "pf", two, 2, extract_pf_bounded(two, 2, 4, 2).first,
      &extract_pf_bounded(two, 2, 4, 2).second, nullptr, nullptr);
  Report second = extract_report(
      "pf", two, 2, extract_pf_bounded(two, 2, 4, 2).first,
      &extract_pf_bounded(two, 2, 4, 2).second, nullptr, nullptr);
  CHECK(first.text() == second.text());
}

TEST_CASE("pf and ext agree to extract through the same tree") {
  TreeTruncation two = gen_twochain(6);
  auto pf = extract_pf_bounded(two, 2, 4, 2);
  auto ext = extract_ext_bounded(two, 2, 4, 2);
  CHECK(validate_path_prefix(two, pf.first).ok());
  CHECK(validate_path_prefix(two, ext.first).ok());
}

TEST_CASE("certificates verify and tampered paths fail") {
  TreeTruncation two = gen_twochain(6);

  auto [pf_path, pf_cert] = extract_pf_bounded(two, 2, 4, 2);
  CHECK(verify_pf_certificate(two, pf_path, pf_cert, 2).ok());

  auto [ext_path, ext_cert] = extract_ext_bounded(two, 2, 3, 3);
  CHECK(verify_ext_certificate(two, ext_path, ext_cert, 2).ok());

  auto [wbd_path, wbd_cert] = extract_w_bounded_kl(two, 2, 3, 3);
  CHECK(verify_wbd_certificate(two, wbd_path, wbd_cert, 2).ok());

  PathPrefix bogus = pf_path;
  bogus.path = seq({0, 0, 1, 0});
  CHECK(!verify_pf_certificate(two, bogus, pf_cert, 2).ok());

  PfCertificate broken = pf_cert;
  broken.p0 = {seq({0}), seq({0, 0})};
  CHECK(!verify_pf_certificate(two, pf_path, broken, 2).ok());

  WbdCertificate crossed = wbd_cert;
  crossed.selection = {0, 1};
  CHECK(!verify_wbd_certificate(two, wbd_path, crossed, 2).ok());
}

TEST_CASE("extract reports round-trip through verify") {
  TreeTruncation two = gen_twochain(6);

  auto [pf_path, pf_cert] = extract_pf_bounded(two, 2, 4, 2);
  Report pf = extract_report("pf", two, 2, pf_path, &pf_cert, nullptr, nullptr);
  VerifyOutcome pf_out = verify_extract_report(Report::parse(pf.text()), two);
  CHECK(pf_out.pass);

  auto [ext_path, ext_cert] = extract_ext_bounded(two, 2, 3, 3);
  Report ext =
      extract_report("ext", two, 2, ext_path, nullptr, &ext_cert, nullptr);
  CHECK(verify_extract_report(Report::parse(ext.text()), two).pass);

  auto [wbd_path, wbd_cert] = extract_w_bounded_kl(two, 2, 3, 3);
  Report wbd =
      extract_report("wbd", two, 2, wbd_path, nullptr, nullptr, &wbd_cert);
  CHECK(verify_extract_report(Report::parse(wbd.text()), two).pass);

  // A tampered path is caught by the independent re-scan.
  std::string tampered = pf.text();
  size_t at = tampered.find("path 0000");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 9, "path 0010");
  VerifyOutcome bad = verify_extract_report(Report::parse(tampered), two);
  CHECK(!bad.pass);
}

TEST_CASE("lookahead_stability flips with the lookahead") {
  EnumeratedTree e = unique_path_tree(stepped_theta(), 6);
  const TreeTruncation& t = e.accumulated();
  StabilityReport r = lookahead_stability(
      t, {seq({1, Seq0 : 0, 0}), seq({1, 0, 1})}, {0, 1, 2, 3});
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].second == std::vector<bool>{true, true, false, false});
  CHECK(r.rows[1].second == std::vector<bool>{true, true, true, true});
}

TEST_CASE("stability rows are monotone non-increasing") {
  Lcg rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    TreeTruncation t = random_tree(rng, 16);
    std::vector<uint32_t> lookaheads;
    for (uint32_t s = 0; s <= t.horizon(); ++s) lookaheads.push_back(s);
    std::vector<Seq> roots = {seq({})};
    StabilityReport r = lookahead_stability(t, roots, lookaheads);
    for (const auto& [node, row] : r.rows) {
      for (size_t i = 1; i < row.size(); ++i) {
        CHECK(row[i] <= row[i - 1]);
      }
    }
  }
}

TEST_CASE("stability at lookahead zero is membership") {
  TreeTruncation comb = gen_comb(6);
  StabilityReport r =
      lookahead_stability(comb, {seq({0, 1}), seq({1, 1})}, {0});
  CHECK(r.rows[0].second == std::vector<bool>{true});
  CHECK(r.rows[1].second == std::vector<bool>{false});
}

#include "tree.hpp"

#include <algorithm>
#include <functional>

#include "doctest.h"
#include "error.hpp"
#include "gen.hpp"
#include "test_support.hpp"

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

}  // namespace

TEST_CASE("validate accepts the root-only tree") {
  TreeTruncation t = make_tree({seq({})}, 0);
  CHECK(t.node_count() == 1);
  CHECK(t.deepest() == 0);
}

TEST_CASE("validate accepts an explicit closure") {
  TreeTruncation t = vee();
  CHECK(t.node_count() == 5);
  CHECK(t.contains(seq({0, 1})));
}

TEST_CASE("validate rejects a missing prefix") {
  CHECK(fails_with(ErrorKind::kParse, "not-prefix-closed: 00", [] {
    make_tree({seq({}), seq({0, 0})}, 2);
  }));
}

TEST_CASE("validate rejects a missing root") {
  CHECK(fails_with(ErrorKind::kParse, "missing-root",
                   [] { make_tree({seq({0})}, 1); }));
  CHECK(fails_with(ErrorKind::kParse, "missing-root", [] { make_tree({}, 0); }));
}

TEST_CASE("validate names the first offender in shortlex order") {
  CHECK(fails_with(ErrorKind::kParse, "alphabet-violation: 2", [] {
    make_tree({seq({}), seq({2}), seq({2, 2})}, 2);
  }));
  CHECK(fails_with(ErrorKind::kParse, "horizon-exceeded: 00", [] {
    make_tree({seq({}), seq({0}), seq({0, 0})}, 1);
  }));
  CHECK(fails_with(ErrorKind::kParse, "duplicate-node: 0", [] {
    make_tree({seq({}), seq({0}), seq({0})}, 1);
  }));
}

TEST_CASE("validate round-trips its own node set") {
  TreeTruncation t = gen_comb(6);
  TreeTruncation again = make_tree(t.all_nodes(), t.horizon(), t.alphabet());
  CHECK(again.all_nodes() == t.all_nodes());
  CHECK(again.horizon() == t.horizon());
}

TEST_CASE("level_set enumerates the fixtures") {
  TreeTruncation comb = gen_comb(6);
  CHECK(level_set(comb, 2) == std::vector<Seq>{seq({0, 0}), seq({0, 1})});
  CHECK(level_set(comb, 0) == std::vector<Seq>{seq({})});
  CHECK(level_set(vee(), 2) == std::vector<Seq>{seq({0, 0}), seq({0, 1})});
  CHECK(fails_with(ErrorKind::kUsage, "level-beyond-horizon",
                   [&] { level_set(comb, 7); }));
}

TEST_CASE("lookahead_extendible drops dead branches") {
  TreeTruncation comb = gen_comb(6);
  CHECK(lookahead_extendible(comb, 2, 3) == std::vector<Seq>{seq({0, 0})});
  CHECK(lookahead_extendible(comb, 2, 0) == level_set(comb, 2));

  TreeTruncation two = gen_twochain(6);
  CHECK(lookahead_extendible(two, 3, 3) ==
        std::vector<Seq>{seq({0, 0, 0}), seq({1, 1, 1})});
  CHECK(fails_with(ErrorKind::kUsage, "lookahead-beyond-horizon",
                   [&] { lookahead_extendible(two, 4, 3); }));
}

TEST_CASE("lookahead survival is monotone in the lookahead") {
  Lcg rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    TreeTruncation t = random_tree(rng, 16);
    for (uint32_t n = 0; n <= t.horizon(); ++n) {
      std::vector<Seq> prev = level_set(t, n);
      for (uint32_t s = 1; n + s <= t.horizon(); ++s) {
        std::vector<Seq> cur = lookahead_extendible(t, n, s);
        CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end(),
                            pointwise_less));
        prev = std::move(cur);
      }
    }
  }
}

TEST_CASE("max_antichain on a single chain") {
  AntichainResult r = max_antichain(chain(1, 3));
  CHECK(r.size == 1);
  // Every singleton attains the maximum on a chain; the least witness is
  // the root.
  CHECK(r.witness == std::vector<Seq>{seq({})});
}

TEST_CASE("max_antichain on the vee") {
  AntichainResult r = max_antichain(vee());
  CHECK(r.size == 3);
  CHECK(r.witness == std::vector<Seq>{seq({1}), seq({0, 0}), seq({0, 1})});
}

TEST_CASE("max_antichain on the comb") {
  AntichainResult r = max_antichain(gen_comb(6));
  CHECK(r.size == 7);
  CHECK(r.witness ==
        std::vector<Seq>{seq({1}), seq({0, 1}), seq({0, 0, 1}),
                         seq({0, 0, 0, 1}), seq({0, 0, 0, 0, 1}),
                         seq({0, 0, 0, 0, 0, 1}),
                         seq({0, 0, 0, 0, 0, 0})});
}

TEST_CASE("max_antichain matches the exhaustive oracle on random trees") {
  Lcg rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Alphabet a = trial % 3 == 0   ? Alphabet::kNat
                 : trial % 3 == 1 ? Alphabet::kTernary
                                  : Alphabet::kBinary;
    TreeTruncation t = random_tree(rng, 12, a);
    AntichainResult r = max_antichain(t);
    CHECK(r.size == antichain_oracle(t));
    CHECK(r.witness.size() == r.size);
    for (size_t i = 0; i < r.witness.size(); ++i) {
      CHECK(t.contains(r.witness[i]));
      for (size_t j = i + 1; j < r.witness.size(); ++j) {
        CHECK(!comparable(r.witness[i], r.witness[j]));
      }
    }
  }
}

TEST_CASE("antichain size dominates every level width") {
  Lcg rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    TreeTruncation t = random_tree(rng, 18);
    size_t size = max_antichain(t).size;
    for (uint32_t n = 0; n <= t.horizon(); ++n) {
      CHECK(size >= level_set(t, n).size());
    }
  }
}

TEST_CASE("width_profile over the comb") {
  WidthReport w = width_profile(gen_comb(6), {0, 1});
  REQUIRE(w.levels.size() == 7);
  CHECK(w.levels[0].level_width == 1);
  for (uint32_t n = 1; n <= 6; ++n) CHECK(w.levels[n].level_width == 2);
  for (uint32_t n = 0; n <= 5; ++n) {
    REQUIRE(w.levels[n].ext_widths.size() == 2);
    CHECK(w.levels[n].ext_widths[1].second == 1);
  }
  // n + s past the horizon reports no value rather than an error.
  CHECK(!w.levels[6].ext_widths[1].second.has_value());
  CHECK(w.max_antichain_size == 7);
}

TEST_CASE("width_profile of the root-only tree") {
  WidthReport w = width_profile(make_tree({seq({})}, 0), {0});
  REQUIRE(w.levels.size() == 1);
  CHECK(w.levels[0].level_width == 1);
  CHECK(w.max_antichain_size == 1);
}

TEST_CASE("width_profile of the twochain at lookahead 3") {
  WidthReport w = width_profile(gen_twochain(6), {3});
  CHECK(w.levels[0].ext_widths[0].second == 1);
  for (uint32_t n = 1; n <= 3; ++n) {
    CHECK(w.levels[n].ext_widths[0].second == 2);
  }
}

TEST_CASE("is_path_prefix is membership") {
  TreeTruncation comb = gen_comb(6);
  CHECK(is_path_prefix(comb, seq({0, 0, 0, 1})));
  CHECK(!is_path_prefix(comb, seq({1, 1})));
  CHECK(is_path_prefix(comb, seq({})));
}

TEST_CASE("vsmall_check on the fixtures") {
  FunctionTable identity(
      {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}}, 7,
      std::nullopt);

  VsmallResult two = vsmall_check(gen_twochain(6), identity, 3);
  CHECK(two.pass);
  CHECK(two.witness_n == 3);

  VsmallResult full = vsmall_check(gen_fullbinary(6), identity, 2);
  CHECK(!full.pass);
  CHECK(full.violating == 2);

  FunctionTable zero({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 4, std::nullopt);
  VsmallResult comb = vsmall_check(gen_comb(6), zero, 3);
  CHECK(comb.pass);
  CHECK(comb.witness_n == 2);

  FunctionTable deep({{0, 20}}, 1, std::nullopt);
  CHECK(fails_with(ErrorKind::kUsage, "range-empty",
                   [&] { vsmall_check(gen_comb(6), deep, 1); }));
}

#include "transforms.hpp"

#include <functional>
#include <set>

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

// sigma_0 = e, sigma_1 = 1, sigma_2 = 0, sigma_3 = 11
EnumeratedTree small_enumeration() {
  return EnumeratedTree::create(
      {{0, seq({})}, {1, seq({1})}, {2, seq({0})}, {3, seq({1, 1})}}, 2,
      Alphabet::kBinary);
}

// i even, m = i + 3, within m < 8 and i < 8.
PredicateTable stepped_theta() {
  return PredicateTable({{3, 0}, {5, 2}, {7, 4}}, 8, 8);
}

}  // namespace

TEST_CASE("hat_interpret realizes exactly the chain tuples") {
  TreeTruncation hat = hat_interpret(small_enumeration(), 3);
  CHECK(hat.contains(seq({0, 1, 3})));
  CHECK(!hat.contains(seq({0, 2, 3})));  // 0 is not a prefix of 11
  CHECK(hat.contains(seq({})));
  CHECK(!hat.contains(seq({0, 0})));  // lh(sigma_0) = 0, not 1
  CHECK(hat.alphabet() == Alphabet::kNat);
}

TEST_CASE("hat_interpret rejects unrealizable depths") {
  CHECK(fails_with(ErrorKind::kUsage, "depth-unrealizable",
                   [] { hat_interpret(small_enumeration(), 4); }));
}

TEST_CASE("hat members induce strictly lengthening chains") {
  Lcg rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    TreeTruncation source = random_tree(rng, 14);
    // Enumerate in shortlex order: parents always precede children.
    std::vector<EnumeratedTree::Entry> entries;
    uint32_t stage = 0;
    for (const Seq& node : source.all_nodes()) {
      entries.push_back({stage++, node});
    }
    EnumeratedTree e = EnumeratedTree::create(std::move(entries),
                                              source.horizon(),
                                              source.alphabet());
    uint32_t depth = std::min<uint32_t>(source.deepest() + 1, 4);
    TreeTruncation hat = hat_interpret(e, depth);
    for (const Seq& tau : hat.all_nodes()) {
      for (size_t i = 0; i < tau.length(); ++i) {
        CHECK(e.enumerated(tau.at(i)).length() == i);
        if (i > 0) {
          CHECK(e.enumerated(tau.at(i - 1))
                    .is_prefix_of(e.enumerated(tau.at(i))));
        }
      }
      // Projection lands one level shallower in the source tree.
      Seq projected = project_hat_path(e, tau);
      CHECK(source.contains(projected));
      CHECK(projected.length() == (tau.empty() ? 0 : tau.length() - 1));
    }
  }
}

TEST_CASE("project_hat_path follows the chain endpoint") {
  EnumeratedTree e = small_enumeration();
  CHECK(project_hat_path(e, seq({0, 1, 3})) == seq({1, 1}));
  CHECK(project_hat_path(e, seq({})) == seq({}));
  CHECK(project_hat_path(e, seq({0, 2})) == seq({0}));
  CHECK(fails_with(ErrorKind::kUsage, "not-in-hat-tree",
                   [&] { project_hat_path(e, seq({0, 0})); }));
}

TEST_CASE("unique_path_tree stages the characteristic prefixes") {
  EnumeratedTree e = unique_path_tree(stepped_theta(), 4);
  const TreeTruncation& t = e.accumulated();
  CHECK(level_set(t, 3) ==
        std::vector<Seq>{seq({1, 0, 0}), seq({1, 0, 1})});
}

TEST_CASE("unique_path_tree of the empty table is the zero chain") {
  PredicateTable empty({}, 4, 6);
  EnumeratedTree e = unique_path_tree(empty, 6);
  const TreeTruncation& t = e.accumulated();
  CHECK(t.node_count() == 7);
  for (uint32_t k = 0; k <= 6; ++k) {
    CHECK(t.contains(repeated(0, k)));
  }
}

TEST_CASE("unique_path_tree narrows to width one under lookahead") {
  EnumeratedTree e = unique_path_tree(stepped_theta(), 6);
  const TreeTruncation& t = e.accumulated();
  std::vector<Seq> surviving = lookahead_extendible(t, 3, 3);
  CHECK(surviving == std::vector<Seq>{seq({1, 0, 1})});
}

TEST_CASE("unique_path_tree is width one past the stabilization bound") {
  Lcg rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    std::set<std::pair<uint32_t, uint32_t>> pairs;
    uint32_t m_horizon = 2 + rng.below(4);
    for (int p = 0; p < 8; ++p) {
      pairs.insert({rng.below(m_horizon), rng.below(10)});
    }
    PredicateTable theta(pairs, m_horizon, 10);
    uint32_t horizon = 10;
    EnumeratedTree e = unique_path_tree(theta, horizon);
    const TreeTruncation& t = e.accumulated();
    uint32_t stab = theta.stabilization_bound();
    for (uint32_t n = 0; n <= horizon; ++n) {
      for (uint32_t s = stab + 1; n + s <= horizon; ++s) {
        CHECK(lookahead_extendible(t, n, s).size() == 1);
      }
    }
  }
}

TEST_CASE("pad_to_narrow on the deep comb") {
  PaddingResult r = pad_to_narrow(gen_comb(9), 1, 5);
  CHECK(r.schedule.entries == std::vector<uint32_t>{1, 2, 3, 4, 5});
  CHECK(r.schedule.top_lookahead == 4);
  const TreeTruncation& t = r.narrowed;
  CHECK(t.alphabet() == Alphabet::kTernary);
  CHECK(t.contains(seq({2})));
  CHECK(t.contains(seq({2, 0})));
  CHECK(t.contains(seq({2, 0, 0})));
  for (uint32_t n = 0; n <= t.horizon(); ++n) {
    CHECK(t.level(n).size() <= 1);
  }
  // Auto level selection reaches the same schedule.
  PaddingResult automatic = pad_to_narrow(gen_comb(9), 1, std::nullopt);
  CHECK(automatic.schedule.entries == r.schedule.entries);
}

TEST_CASE("pad_to_narrow rejects wide trees and zero bounds") {
  CHECK(fails_with(ErrorKind::kBound, "bound-not-achievable: level=2",
                   [] { pad_to_narrow(gen_fullbinary(6), 2, 4); }));
  CHECK(fails_with(ErrorKind::kBound, "invalid-bound: c=0",
                   [] { pad_to_narrow(gen_comb(6), 0, 2); }));
}

TEST_CASE("pad_to_narrow of a single chain") {
  PaddingResult r = pad_to_narrow(chain(1, 5), 1, 3);
  CHECK(r.schedule.entries == std::vector<uint32_t>{1, 2, 3});
  const TreeTruncation& t = r.narrowed;
  CHECK(t.horizon() == 4);
  CHECK(t.contains(seq({2})));
  CHECK(t.contains(seq({2, 1})));
  CHECK(t.contains(seq({2, 1, 1})));
  CHECK(t.contains(seq({2, 1, 1, 1})));
  CHECK(t.node_count() == 5);
}

TEST_CASE("pad round trip recovers a path prefix of the source") {
  Lcg rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    uint32_t k = 1 + rng.below(3);
    TreeTruncation source = gen_bristled(k, 16, rng.next());
    PaddingResult r = pad_to_narrow(source, k, std::nullopt);
    Seq branch = leftmost_maximal_branch(r.narrowed);
    CHECK(branch.length() == r.schedule.entries.back() + 1);
    Seq recovered = strip_twos(branch);
    CHECK(recovered.length() == r.schedule.entries.size());
    CHECK(source.contains(recovered));
    // Every narrowed node strips to a source node.
    for (const Seq& node : r.narrowed.all_nodes()) {
      CHECK(source.contains(strip_twos(node)));
    }
  }
}

TEST_CASE("strip_twos keeps non-two entries in order") {
  CHECK(strip_twos(seq({2, 0, 0})) == seq({0, 0}));
  CHECK(strip_twos(seq({})) == seq({}));
  CHECK(strip_twos(seq({2, 1, 2, 0})) == seq({1, 0}));
}

TEST_CASE("cex_prefix_free realizes the staircase") {
  FunctionTable h({{0, 0}, {1, 0}, {2, 0}, {3, 1}, {4, 1}, {5, 1}}, 6, 2);
  EnumeratedTree e = cex_prefix_free(h, 6);
  const TreeTruncation& t = e.accumulated();
  // 1^{h(n)} 0^n for every stage.
  for (uint32_t n = 0; n < 6; ++n) {
    std::vector<uint32_t> entries(h.at(n), 1);
    entries.insert(entries.end(), n, 0);
    CHECK(t.contains(Seq(entries)));
  }
  CHECK(t.contains(seq({1, 0, 0, 0, 0, 0})));
  AntichainResult ac = max_antichain(t);
  CHECK(ac.size == 2);
  CHECK(ac.size == antichain_oracle(t));
  CHECK(t.deepest() == 6);  // max of h(n) + n
}

TEST_CASE("cex_prefix_free of a constant function is a chain") {
  FunctionTable h({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 4, 1);
  EnumeratedTree e = cex_prefix_free(h, 4);
  const TreeTruncation& t = e.accumulated();
  CHECK(t.node_count() == 4);  // 0^y for y <= 3
  CHECK(max_antichain(t).size == 1);
}

TEST_CASE("cex_level_width with an always-true table") {
  // Every position survives every stage, so the all-ones strings hit the
  // cardinality guard at length 2.
  std::set<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t m = 0; m < 4; ++m) {
    for (uint32_t i = 0; i < 3; ++i) pairs.insert({m, i});
  }
  EnumeratedTree e = cex_level_width(PredicateTable(pairs, 4, 3), 1, 3);
  const TreeTruncation& t = e.accumulated();
  CHECK(t.node_count() == 2);
  CHECK(t.contains(seq({})));
  CHECK(t.contains(seq({1})));
}

TEST_CASE("cex_level_width keeps the surviving characteristic") {
  // Erase every position outside {2, 5} by stage 8.
  std::set<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t m = 0; m < 9; ++m) {
    for (uint32_t i = 0; i < 8; ++i) {
      bool erased = (i != 2 && i != 5) && m >= 2 + (i % 6);
      if (!erased) pairs.insert({m, i});
    }
  }
  PredicateTable theta(pairs, 9, 8);
  EnumeratedTree e = cex_level_width(theta, 2, 8);
  const TreeTruncation& t = e.accumulated();
  CHECK(t.contains(seq({0, 0, 1, 0, 0})));
  for (uint32_t n = 0; n <= 8; ++n) {
    Seq limit;
    for (uint32_t i = 0; i < n; ++i) {
      limit = limit.extended(i == 2 || i == 5 ? 1 : 0);
    }
    CHECK(t.contains(limit));
    CHECK(level_set(t, n).size() <= 3);  // c + 1
  }
}

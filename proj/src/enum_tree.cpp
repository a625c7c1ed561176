#include "enum_tree.hpp"

#include <set>
#include <string>

#include "error.hpp"

namespace wkl {

EnumeratedTree EnumeratedTree::create(std::vector<Entry> entries,
                                      uint32_t horizon, Alphabet alphabet) {
  std::set<Seq, ShortlexLess> seen;
  uint32_t last_stage = 0;
  std::vector<Seq> nodes;
  nodes.reserve(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (i > 0 && e.stage < last_stage) {
      fail(ErrorKind::kParse,
           "stage-order: stage " + std::to_string(e.stage) + " after " +
               std::to_string(last_stage));
    }
    last_stage = e.stage;
    if (!seen.insert(e.node).second) {
      fail(ErrorKind::kParse,
           "duplicate-node: " + render_seq(e.node, alphabet));
    }
    if (!e.node.empty() && !seen.count(e.node.parent())) {
      fail(ErrorKind::kParse,
           "not-prefix-closed: " + render_seq(e.node, alphabet) +
               " enumerated before its parent");
    }
    nodes.push_back(e.node);
  }
  TreeTruncation accumulated =
      TreeTruncation::validate(std::move(nodes), horizon, alphabet);
  return EnumeratedTree(std::move(entries), std::move(accumulated));
}

}  // namespace wkl

#pragma once

#include <cstdint>
#include <vector>

#include "seq.hpp"
#include "tree.hpp"

namespace wkl {

// A staged enumeration approximating a tree given by listing its members.
// Generator discipline: prefixes are emitted before their extensions, so
// the set accumulated through any stage is itself a tree, and the full
// accumulation validates as a truncation.
class EnumeratedTree {
 public:
  struct Entry {
    uint32_t stage = 0;
    Seq node;
  };

  static EnumeratedTree create(std::vector<Entry> entries, uint32_t horizon,
                               Alphabet alphabet);

  const std::vector<Entry>& entries() const { return entries_; }
  size_t enumeration_size() const { return entries_.size(); }

  // The i-th enumerated string.
  const Seq& enumerated(size_t i) const { return entries_[i].node; }

  uint32_t horizon() const { return accumulated_.horizon(); }
  Alphabet alphabet() const { return accumulated_.alphabet(); }

  const TreeTruncation& accumulated() const { return accumulated_; }

 private:
  EnumeratedTree(std::vector<Entry> entries, TreeTruncation accumulated)
      : entries_(std::move(entries)), accumulated_(std::move(accumulated)) {}

  std::vector<Entry> entries_;
  TreeTruncation accumulated_;
};

}  // namespace wkl

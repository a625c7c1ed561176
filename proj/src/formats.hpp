#pragma once

#include <optional>
#include <string>
#include <variant>

#include "enum_tree.hpp"
#include "tables.hpp"
#include "tree.hpp"

namespace wkl {

// A tree loaded from disk: always a validated truncation, plus the staged
// enumeration when the file carried one.
struct LoadedTree {
  TreeTruncation tree;
  std::optional<EnumeratedTree> enumeration;

  bool is_enumerated() const { return enumeration.has_value(); }
};

// Tree file format:
//   alphabet binary|ternary|nat
//   horizon <D>
//   [enumerated]
//   one node per line, entries space-separated, the root as `-`;
//   enumerated files prefix each node with its stage index.
LoadedTree parse_tree_text(const std::string& text);
std::string tree_to_text(const TreeTruncation& t);
std::string enum_tree_to_text(const EnumeratedTree& e);
std::string loaded_tree_to_text(const LoadedTree& t);

// Table file format:
//   kind predicate|function
//   <mHorizon> <iHorizon>        (predicate)
//   <domainHorizon> <rangeBound|unbounded>   (function)
//   one `m i` / `x v` pair per line.
using LoadedTable = std::variant<PredicateTable, FunctionTable>;
LoadedTable parse_table_text(const std::string& text);
std::string table_to_text(const PredicateTable& t);
std::string table_to_text(const FunctionTable& t);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace wkl

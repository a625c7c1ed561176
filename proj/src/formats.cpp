#include "formats.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace wkl {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string line = text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = eol == std::string::npos ? text.size() : eol + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

uint32_t parse_nat(const std::string& tok, const std::string& what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorKind::kParse, "bad-" + what + ": " + tok);
  }
  return static_cast<uint32_t>(std::stoul(tok));
}

Seq parse_node_tokens(const std::vector<std::string>& toks, size_t from,
                      const std::string& line) {
  if (from + 1 == toks.size() && toks[from] == "-") return Seq();
  std::vector<uint32_t> entries;
  for (size_t i = from; i < toks.size(); ++i) {
    entries.push_back(parse_nat(toks[i], "node entry in line '" + line + "'"));
  }
  if (entries.empty()) fail(ErrorKind::kParse, "bad-node-line: " + line);
  return Seq(std::move(entries));
}

std::string node_line(const Seq& s) {
  if (s.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < s.length(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s.at(i));
  }
  return out;
}

}  // namespace

LoadedTree parse_tree_text(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.size() < 2) fail(ErrorKind::kParse, "truncated-header");

  auto header1 = tokens_of(lines[0]);
  if (header1.size() != 2 || header1[0] != "alphabet") {
    fail(ErrorKind::kParse, "bad-header: " + lines[0]);
  }
  auto alphabet = alphabet_from_name(header1[1]);
  if (!alphabet) fail(ErrorKind::kParse, "bad-alphabet: " + header1[1]);

  auto header2 = tokens_of(lines[1]);
  if (header2.size() != 2 || header2[0] != "horizon") {
    fail(ErrorKind::kParse, "bad-header: " + lines[1]);
  }
  uint32_t horizon = parse_nat(header2[1], "horizon");

  size_t body = 2;
  bool enumerated = false;
  if (lines.size() > 2 && lines[2] == "enumerated") {
    enumerated = true;
    body = 3;
  }

  if (enumerated) {
    std::vector<EnumeratedTree::Entry> entries;
    for (size_t i = body; i < lines.size(); ++i) {
      if (lines[i].empty()) fail(ErrorKind::kParse, "blank-line-in-body");
      auto toks = tokens_of(lines[i]);
      if (toks.size() < 2) fail(ErrorKind::kParse, "bad-stage-line: " + lines[i]);
      EnumeratedTree::Entry e;
      e.stage = parse_nat(toks[0], "stage");
      e.node = parse_node_tokens(toks, 1, lines[i]);
      entries.push_back(std::move(e));
    }
    EnumeratedTree e =
        EnumeratedTree::create(std::move(entries), horizon, *alphabet);
    TreeTruncation t = e.accumulated();
    return LoadedTree{std::move(t), std::move(e)};
  }

  std::vector<Seq> nodes;
  for (size_t i = body; i < lines.size(); ++i) {
    if (lines[i].empty()) fail(ErrorKind::kParse, "blank-line-in-body");
    auto toks = tokens_of(lines[i]);
    nodes.push_back(parse_node_tokens(toks, 0, lines[i]));
  }
  return LoadedTree{TreeTruncation::validate(std::move(nodes), horizon,
                                             *alphabet),
                    std::nullopt};
}

std::string tree_to_text(const TreeTruncation& t) {
  std::string out = "alphabet " + alphabet_name(t.alphabet()) + "\n";
  out += "horizon " + std::to_string(t.horizon()) + "\n";
  for (const Seq& node : t.all_nodes()) {
    out += node_line(node);
    out += '\n';
  }
  return out;
}

std::string enum_tree_to_text(const EnumeratedTree& e) {
  std::string out = "alphabet " + alphabet_name(e.alphabet()) + "\n";
  out += "horizon " + std::to_string(e.horizon()) + "\n";
  out += "enumerated\n";
  for (const auto& entry : e.entries()) {
    out += std::to_string(entry.stage);
    out += ' ';
    out += node_line(entry.node);
    out += '\n';
  }
  return out;
}

std::string loaded_tree_to_text(const LoadedTree& t) {
  return t.enumeration ? enum_tree_to_text(*t.enumeration)
                       : tree_to_text(t.tree);
}

LoadedTable parse_table_text(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.size() < 2) fail(ErrorKind::kParse, "truncated-header");

  auto header1 = tokens_of(lines[0]);
  if (header1.size() != 2 || header1[0] != "kind") {
    fail(ErrorKind::kParse, "bad-header: " + lines[0]);
  }
  auto header2 = tokens_of(lines[1]);
  if (header2.size() != 2) fail(ErrorKind::kParse, "bad-header: " + lines[1]);

  if (header1[1] == "predicate") {
    uint32_t m_horizon = parse_nat(header2[0], "m-horizon");
    uint32_t i_horizon = parse_nat(header2[1], "i-horizon");
    std::set<std::pair<uint32_t, uint32_t>> pairs;
    for (size_t i = 2; i < lines.size(); ++i) {
      auto toks = tokens_of(lines[i]);
      if (toks.size() != 2) fail(ErrorKind::kParse, "bad-pair: " + lines[i]);
      auto pair = std::make_pair(parse_nat(toks[0], "m"),
                                 parse_nat(toks[1], "i"));
      if (!pairs.insert(pair).second) {
        fail(ErrorKind::kParse, "duplicate-pair: " + lines[i]);
      }
    }
    return PredicateTable(std::move(pairs), m_horizon, i_horizon);
  }
  if (header1[1] == "function") {
    uint32_t domain = parse_nat(header2[0], "domain-horizon");
    std::optional<uint32_t> range;
    if (header2[1] != "unbounded") range = parse_nat(header2[1], "range");
    std::map<uint32_t, uint32_t> values;
    for (size_t i = 2; i < lines.size(); ++i) {
      auto toks = tokens_of(lines[i]);
      if (toks.size() != 2) fail(ErrorKind::kParse, "bad-pair: " + lines[i]);
      uint32_t x = parse_nat(toks[0], "x");
      if (values.count(x)) fail(ErrorKind::kParse, "duplicate-pair: " + lines[i]);
      values[x] = parse_nat(toks[1], "v");
    }
    return FunctionTable(std::move(values), domain, range);
  }
  fail(ErrorKind::kParse, "bad-kind: " + header1[1]);
}

std::string table_to_text(const PredicateTable& t) {
  std::string out = "kind predicate\n";
  out += std::to_string(t.m_horizon()) + " " + std::to_string(t.i_horizon()) +
         "\n";
  for (const auto& [m, i] : t.true_pairs()) {
    out += std::to_string(m) + " " + std::to_string(i) + "\n";
  }
  return out;
}

std::string table_to_text(const FunctionTable& t) {
  std::string out = "kind function\n";
  out += std::to_string(t.domain_horizon()) + " ";
  out += t.range_bound() ? std::to_string(*t.range_bound())
                         : std::string("unbounded");
  out += "\n";
  for (const auto& [x, v] : t.values()) {
    out += std::to_string(x) + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kParse, "cannot-open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::kParse, "cannot-write: " + path);
  out << content;
  if (!out) fail(ErrorKind::kParse, "cannot-write: " + path);
}

}  // namespace wkl

// Command-line front end over the shared-library C API.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wkl.h"

namespace {

int exit_code(wkl_status status) {
  switch (status) {
    case WKL_OK:
      return 0;
    case WKL_PARSE_ERROR:
    case WKL_USAGE_ERROR:
      return 1;
    case WKL_BOUND_ERROR:
      return 2;
    case WKL_EXTRACT_ERROR:
      return 3;
  }
  return 1;
}

[[noreturn]] void die(wkl_status status) {
  std::fprintf(stderr, "error: %s\n", wkl_last_error());
  std::exit(exit_code(status));
}

struct TreeHandle {
  wkl_tree* ptr = nullptr;
  ~TreeHandle() { wkl_tree_free(ptr); }
};

struct TableHandle {
  wkl_table* ptr = nullptr;
  ~TableHandle() { wkl_table_free(ptr); }
};

struct ReportHandle {
  wkl_report* ptr = nullptr;
  ~ReportHandle() { wkl_report_free(ptr); }
};

void load_tree(const std::string& path, TreeHandle& tree) {
  wkl_status status = wkl_tree_read(path.c_str(), &tree.ptr);
  if (status != WKL_OK) die(status);
}

void load_table(const std::string& path, TableHandle& table) {
  wkl_status status = wkl_table_read(path.c_str(), &table.ptr);
  if (status != WKL_OK) die(status);
}

void print_report(const wkl_report* report) {
  std::fputs(wkl_report_text(report), stdout);
}

void write_report(const std::string& path, const wkl_report* report) {
  FILE* out = std::fopen(path.c_str(), "wb");
  if (!out) {
    std::fprintf(stderr, "error: cannot-write: %s\n", path.c_str());
    std::exit(1);
  }
  std::fputs(wkl_report_text(report), out);
  std::fclose(out);
}

std::vector<unsigned> parse_csv_nats(const std::string& csv) {
  std::vector<unsigned> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) {
        std::fprintf(stderr, "error: bad-number: %s\n", tok.c_str());
        std::exit(1);
      }
      out.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"width-bounded tree analysis and certified path extraction"};
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand("validate", "parse and validate a tree file");
  std::string validate_file;
  validate->add_option("file", validate_file)->required();
  validate->callback([&]() {
    TreeHandle tree;
    load_tree(validate_file, tree);
    ReportHandle report;
    wkl_status status = wkl_describe(tree.ptr, "validate", &report.ptr);
    if (status != WKL_OK) die(status);
    print_report(report.ptr);
  });

  // widths
  auto* widths = app.add_subcommand("widths", "level and lookahead width profile");
  std::string widths_file, widths_lookaheads = "0";
  widths->add_option("file", widths_file)->required();
  widths->add_option("--lookaheads", widths_lookaheads,
                     "comma-separated lookaheads");
  widths->callback([&]() {
    TreeHandle tree;
    load_tree(widths_file, tree);
    std::vector<unsigned> s = parse_csv_nats(widths_lookaheads);
    ReportHandle report;
    wkl_status status =
        wkl_widths(tree.ptr, s.data(), s.size(), &report.ptr);
    if (status != WKL_OK) die(status);
    print_report(report.ptr);
  });

  // antichain
  auto* antichain = app.add_subcommand("antichain", "maximum prefix-free subset");
  std::string antichain_file;
  antichain->add_option("file", antichain_file)->required();
  antichain->callback([&]() {
    TreeHandle tree;
    load_tree(antichain_file, tree);
    ReportHandle report;
    wkl_status status = wkl_antichain(tree.ptr, &report.ptr);
    if (status != WKL_OK) die(status);
    print_report(report.ptr);
  });

  // pad
  auto* pad = app.add_subcommand("pad", "width-narrowing ternary padding");
  std::string pad_file, pad_out;
  unsigned pad_c = 1, pad_levels = 0;
  pad->add_option("file", pad_file)->required();
  pad->add_option("--c", pad_c, "target width bound")->required();
  pad->add_option("--levels", pad_levels,
                  "schedule length (default: as far as the horizon allows)");
  pad->add_option("--out", pad_out, "write the padded tree here")->required();
  pad->callback([&]() {
    TreeHandle tree;
    load_tree(pad_file, tree);
    TreeHandle padded;
    ReportHandle report;
    wkl_status status =
        wkl_pad(tree.ptr, pad_c, pad_levels, &padded.ptr, &report.ptr);
    if (status != WKL_OK) die(status);
    status = wkl_tree_write(padded.ptr, pad_out.c_str());
    if (status != WKL_OK) die(status);
    print_report(report.ptr);
  });

  // extract
  auto* extract = app.add_subcommand("extract", "certified path extraction");
  std::string extract_variant, extract_file, extract_out;
  unsigned extract_c = 1, extract_len = 0, extract_lookahead = 0;
  extract->add_option("variant", extract_variant)
      ->required()
      ->check(CLI::IsMember({"pf", "ext", "wbd"}));
  extract->add_option("file", extract_file)->required();
  extract->add_option("--c", extract_c, "hypothesis bound")->required();
  extract->add_option("--len", extract_len, "requested path length")
      ->required();
  extract->add_option("--lookahead", extract_lookahead,
                      "survival lookahead");
  extract->add_option("--out", extract_out, "also write the report here");
  extract->callback([&]() {
    TreeHandle tree;
    load_tree(extract_file, tree);
    ReportHandle report;
    wkl_status status =
        wkl_extract(tree.ptr, extract_variant.c_str(), extract_c, extract_len,
                    extract_lookahead, &report.ptr);
    if (status != WKL_OK) die(status);
    if (!extract_out.empty()) write_report(extract_out, report.ptr);
    print_report(report.ptr);
  });

  // gen
  auto* gen = app.add_subcommand("gen", "generate fixture trees");
  std::string gen_kind, gen_out, gen_table, gen_in;
  unsigned gen_depth = 6, gen_k = 2, gen_horizon = 6, gen_c = 1;
  unsigned gen_seed = 0;
  gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"comb", "twochain", "fullbinary", "bristled",
                             "cex-pf", "cex-width", "unique-path", "hat"}));
  gen->add_option("--depth", gen_depth, "tree depth / interpretation depth");
  gen->add_option("--k", gen_k, "bristled: number of chains");
  gen->add_option("--horizon", gen_horizon, "enumeration horizon");
  gen->add_option("--c", gen_c, "cex-width: cardinality guard");
  gen->add_option("--seed", gen_seed, "bristled: generator seed");
  gen->add_option("--table", gen_table, "table file for cex-pf/cex-width/unique-path");
  gen->add_option("--in", gen_in, "hat: enumerated source tree");
  gen->add_option("--out", gen_out, "write the tree here");
  gen->callback([&]() {
    TableHandle table;
    TreeHandle source;
    if (!gen_table.empty()) load_table(gen_table, table);
    if (!gen_in.empty()) load_tree(gen_in, source);
    wkl_gen_params params{};
    params.depth = gen_depth;
    params.k = gen_k;
    params.horizon = gen_horizon;
    params.c = gen_c;
    params.seed = gen_seed;
    params.table = table.ptr;
    params.source = source.ptr;
    TreeHandle tree;
    wkl_status status = wkl_generate(gen_kind.c_str(), &params, &tree.ptr);
    if (status != WKL_OK) die(status);
    if (gen_out.empty()) {
      ReportHandle text;
      status = wkl_tree_serialize(tree.ptr, &text.ptr);
      if (status != WKL_OK) die(status);
      print_report(text.ptr);
    } else {
      status = wkl_tree_write(tree.ptr, gen_out.c_str());
      if (status != WKL_OK) die(status);
      ReportHandle report;
      status = wkl_describe(tree.ptr, "gen", &report.ptr);
      if (status != WKL_OK) die(status);
      print_report(report.ptr);
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "re-verify an extract report");
  std::string verify_report_file, verify_tree_file;
  verify->add_option("report", verify_report_file)->required();
  verify->add_option("file", verify_tree_file)->required();
  verify->callback([&]() {
    TreeHandle tree;
    load_tree(verify_tree_file, tree);
    FILE* in = std::fopen(verify_report_file.c_str(), "rb");
    if (!in) {
      std::fprintf(stderr, "error: cannot-open: %s\n",
                   verify_report_file.c_str());
      std::exit(1);
    }
    std::string text;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), in)) > 0) {
      text.append(buf, got);
    }
    std::fclose(in);
    ReportHandle report;
    wkl_status status = wkl_verify(text.c_str(), tree.ptr, &report.ptr);
    if (status != WKL_OK && !report.ptr) die(status);
    print_report(report.ptr);
    std::exit(exit_code(status));
  });

  // stability
  auto* stability = app.add_subcommand("stability", "survival across lookaheads");
  std::string stability_file, stability_nodes, stability_lookaheads = "0";
  stability->add_option("file", stability_file)->required();
  stability->add_option("--nodes", stability_nodes, "comma-separated nodes")
      ->required();
  stability->add_option("--lookaheads", stability_lookaheads,
                        "comma-separated lookaheads");
  stability->callback([&]() {
    TreeHandle tree;
    load_tree(stability_file, tree);
    std::vector<unsigned> s = parse_csv_nats(stability_lookaheads);
    ReportHandle report;
    wkl_status status = wkl_stability(tree.ptr, stability_nodes.c_str(),
                                      s.data(), s.size(), &report.ptr);
    if (status != WKL_OK) die(status);
    print_report(report.ptr);
  });

  // vsmall
  auto* vsmall = app.add_subcommand("vsmall", "very-smallness check");
  std::string vsmall_file, vsmall_table;
  unsigned vsmall_start = 0;
  vsmall->add_option("file", vsmall_file)->required();
  vsmall->add_option("--f", vsmall_table, "function table file")->required();
  vsmall->add_option("--start", vsmall_start, "witness search bound")
      ->required();
  vsmall->callback([&]() {
    TreeHandle tree;
    load_tree(vsmall_file, tree);
    TableHandle table;
    load_table(vsmall_table, table);
    ReportHandle report;
    wkl_status status =
        wkl_vsmall(tree.ptr, table.ptr, vsmall_start, &report.ptr);
    if (status != WKL_OK && !report.ptr) die(status);
    print_report(report.ptr);
    std::exit(exit_code(status));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }
  return 0;
}

#include "wkl.h"

#include <new>
#include <string>
#include <variant>

#include "error.hpp"
#include "extract.hpp"
#include "formats.hpp"
#include "gen.hpp"
#include "report_io.hpp"
#include "transforms.hpp"

struct wkl_tree {
  wkl::LoadedTree loaded;
};

struct wkl_table {
  wkl::LoadedTable loaded;
};

struct wkl_report {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

wkl_status status_of(wkl::ErrorKind kind) {
  switch (kind) {
    case wkl::ErrorKind::kParse:
      return WKL_PARSE_ERROR;
    case wkl::ErrorKind::kBound:
      return WKL_BOUND_ERROR;
    case wkl::ErrorKind::kExtract:
      return WKL_EXTRACT_ERROR;
    case wkl::ErrorKind::kUsage:
      return WKL_USAGE_ERROR;
  }
  return WKL_USAGE_ERROR;
}

template <typename Fn>
wkl_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const wkl::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WKL_USAGE_ERROR;
  }
}

wkl_report* make_report(std::string text) {
  return new wkl_report{std::move(text)};
}

const wkl::PredicateTable& predicate_of(const wkl_table* table) {
  if (!table || !std::holds_alternative<wkl::PredicateTable>(table->loaded)) {
    wkl::fail(wkl::ErrorKind::kUsage, "table-not-predicate");
  }
  return std::get<wkl::PredicateTable>(table->loaded);
}

const wkl::FunctionTable& function_of(const wkl_table* table) {
  if (!table || !std::holds_alternative<wkl::FunctionTable>(table->loaded)) {
    wkl::fail(wkl::ErrorKind::kUsage, "table-not-function");
  }
  return std::get<wkl::FunctionTable>(table->loaded);
}

void require(bool ok, const char* what) {
  if (!ok) wkl::fail(wkl::ErrorKind::kUsage, what);
}

}  // namespace

extern "C" {

const char* wkl_version(void) { return "1.0.0"; }

const char* wkl_last_error(void) { return g_last_error.c_str(); }

wkl_status wkl_tree_parse(const char* text, wkl_tree** out) {
  return guarded([&]() {
    require(text && out, "null-argument");
    *out = new wkl_tree{wkl::parse_tree_text(text)};
    return WKL_OK;
  });
}

wkl_status wkl_tree_read(const char* path, wkl_tree** out) {
  return guarded([&]() {
    require(path && out, "null-argument");
    *out = new wkl_tree{wkl::parse_tree_text(wkl::read_text_file(path))};
    return WKL_OK;
  });
}

wkl_status wkl_tree_write(const wkl_tree* tree, const char* path) {
  return guarded([&]() {
    require(tree && path, "null-argument");
    wkl::write_text_file(path, wkl::loaded_tree_to_text(tree->loaded));
    return WKL_OK;
  });
}

wkl_status wkl_tree_serialize(const wkl_tree* tree, wkl_report** out) {
  return guarded([&]() {
    require(tree && out, "null-argument");
    *out = make_report(wkl::loaded_tree_to_text(tree->loaded));
    return WKL_OK;
  });
}

void wkl_tree_free(wkl_tree* tree) { delete tree; }

unsigned wkl_tree_horizon(const wkl_tree* tree) {
  return tree ? tree->loaded.tree.horizon() : 0;
}

size_t wkl_tree_node_count(const wkl_tree* tree) {
  return tree ? tree->loaded.tree.node_count() : 0;
}

int wkl_tree_is_enumerated(const wkl_tree* tree) {
  return tree && tree->loaded.is_enumerated() ? 1 : 0;
}

wkl_status wkl_table_parse(const char* text, wkl_table** out) {
  return guarded([&]() {
    require(text && out, "null-argument");
    *out = new wkl_table{wkl::parse_table_text(text)};
    return WKL_OK;
  });
}

wkl_status wkl_table_read(const char* path, wkl_table** out) {
  return guarded([&]() {
    require(path && out, "null-argument");
    *out = new wkl_table{wkl::parse_table_text(wkl::read_text_file(path))};
    return WKL_OK;
  });
}

void wkl_table_free(wkl_table* table) { delete table; }

const char* wkl_report_text(const wkl_report* report) {
  return report ? report->text.c_str() : "";
}

void wkl_report_free(wkl_report* report) { delete report; }

wkl_status wkl_describe(const wkl_tree* tree, const char* command_label,
                        wkl_report** out) {
  return guarded([&]() {
    require(tree && command_label && out, "null-argument");
    *out = make_report(
        wkl::describe_report(command_label, tree->loaded).text());
    return WKL_OK;
  });
}

wkl_status wkl_widths(const wkl_tree* tree, const unsigned* lookaheads,
                      size_t count, wkl_report** out) {
  return guarded([&]() {
    require(tree && out && (count == 0 || lookaheads), "null-argument");
    std::vector<uint32_t> s(lookaheads, lookaheads + count);
    *out = make_report(wkl::widths_report(tree->loaded.tree, s).text());
    return WKL_OK;
  });
}

wkl_status wkl_antichain(const wkl_tree* tree, wkl_report** out) {
  return guarded([&]() {
    require(tree && out, "null-argument");
    *out = make_report(wkl::antichain_report(tree->loaded.tree).text());
    return WKL_OK;
  });
}

wkl_status wkl_pad(const wkl_tree* tree, unsigned c, unsigned max_levels,
                   wkl_tree** padded, wkl_report** out) {
  return guarded([&]() {
    require(tree && padded && out, "null-argument");
    std::optional<uint32_t> levels;
    if (max_levels > 0) levels = max_levels;
    wkl::PaddingResult result =
        wkl::pad_to_narrow(tree->loaded.tree, c, levels);
    *out = make_report(wkl::pad_report(result).text());
    *padded = new wkl_tree{
        wkl::LoadedTree{std::move(result.narrowed), std::nullopt}};
    return WKL_OK;
  });
}

wkl_status wkl_extract(const wkl_tree* tree, const char* variant, unsigned c,
                       unsigned target_len, unsigned lookahead,
                       wkl_report** out) {
  return guarded([&]() {
    require(tree && variant && out, "null-argument");
    const wkl::TreeTruncation& t = tree->loaded.tree;
    std::string kind = variant;
    wkl::Report report;
    if (kind == "pf") {
      auto [path, cert] = wkl::extract_pf_bounded(t, c, target_len, lookahead);
      report = wkl::extract_report(kind, t, c, path, &cert, nullptr, nullptr);
    } else if (kind == "ext") {
      auto [path, cert] =
          wkl::extract_ext_bounded(t, c, target_len, lookahead);
      report = wkl::extract_report(kind, t, c, path, nullptr, &cert, nullptr);
    } else if (kind == "wbd") {
      auto [path, cert] =
          wkl::extract_w_bounded_kl(t, c, target_len, lookahead);
      report = wkl::extract_report(kind, t, c, path, nullptr, nullptr, &cert);
    } else {
      wkl::fail(wkl::ErrorKind::kUsage, "bad-variant: " + kind);
    }
    *out = make_report(report.text());
    return WKL_OK;
  });
}

wkl_status wkl_verify(const char* report_text, const wkl_tree* tree,
                      wkl_report** out) {
  return guarded([&]() {
    require(report_text && tree && out, "null-argument");
    wkl::Report claimed = wkl::Report::parse(report_text);
    wkl::VerifyOutcome outcome =
        wkl::verify_extract_report(claimed, tree->loaded.tree);
    *out = make_report(outcome.report.text());
    if (!outcome.pass) {
      g_last_error = "verification-failed";
      return WKL_BOUND_ERROR;
    }
    return WKL_OK;
  });
}

wkl_status wkl_stability(const wkl_tree* tree, const char* nodes_csv,
                         const unsigned* lookaheads, size_t count,
                         wkl_report** out) {
  return guarded([&]() {
    require(tree && nodes_csv && out && (count == 0 || lookaheads),
            "null-argument");
    const wkl::TreeTruncation& t = tree->loaded.tree;
    std::vector<wkl::Seq> nodes;
    std::string csv = nodes_csv;
    size_t pos = 0;
    while (pos <= csv.size()) {
      size_t comma = csv.find(',', pos);
      std::string tok = csv.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!tok.empty()) nodes.push_back(wkl::parse_seq(tok, t.alphabet()));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    std::vector<uint32_t> s(lookaheads, lookaheads + count);
    wkl::StabilityReport result = wkl::lookahead_stability(t, nodes, s);
    *out = make_report(wkl::stability_report(t, result).text());
    return WKL_OK;
  });
}

wkl_status wkl_vsmall(const wkl_tree* tree, const wkl_table* f,
                      unsigned start_bound, wkl_report** out) {
  return guarded([&]() {
    require(tree && out, "null-argument");
    const wkl::TreeTruncation& t = tree->loaded.tree;
    wkl::VsmallResult result =
        wkl::vsmall_check(t, function_of(f), start_bound);
    *out = make_report(wkl::vsmall_report(t, start_bound, result).text());
    if (!result.pass) {
      g_last_error = "vsmall-failed" +
                     (result.violating
                          ? ": m=" + std::to_string(*result.violating)
                          : std::string());
      return WKL_BOUND_ERROR;
    }
    return WKL_OK;
  });
}

wkl_status wkl_generate(const char* kind, const wkl_gen_params* params,
                        wkl_tree** out) {
  return guarded([&]() {
    require(kind && params && out, "null-argument");
    std::string k = kind;
    std::optional<wkl::LoadedTree> result;
    if (k == "comb") {
      result.emplace(wkl::LoadedTree{wkl::gen_comb(params->depth), std::nullopt});
    } else if (k == "twochain") {
      result.emplace(wkl::LoadedTree{wkl::gen_twochain(params->depth), std::nullopt});
    } else if (k == "fullbinary") {
      result.emplace(wkl::LoadedTree{wkl::gen_fullbinary(params->depth), std::nullopt});
    } else if (k == "bristled") {
      result.emplace(wkl::LoadedTree{
          wkl::gen_bristled(params->k, params->depth, params->seed),
          std::nullopt});
    } else if (k == "cex-pf") {
      wkl::EnumeratedTree e =
          wkl::cex_prefix_free(function_of(params->table), params->horizon);
      result.emplace(wkl::LoadedTree{e.accumulated(), std::move(e)});
    } else if (k == "cex-width") {
      wkl::EnumeratedTree e = wkl::cex_level_width(
          predicate_of(params->table), params->c, params->horizon);
      result.emplace(wkl::LoadedTree{e.accumulated(), std::move(e)});
    } else if (k == "unique-path") {
      wkl::EnumeratedTree e =
          wkl::unique_path_tree(predicate_of(params->table), params->horizon);
      result.emplace(wkl::LoadedTree{e.accumulated(), std::move(e)});
    } else if (k == "hat") {
      require(params->source != nullptr, "null-argument");
      if (!params->source->loaded.enumeration) {
        wkl::fail(wkl::ErrorKind::kUsage, "hat-requires-enumerated-tree");
      }
      result.emplace(wkl::LoadedTree{
          wkl::hat_interpret(*params->source->loaded.enumeration,
                             params->depth),
          std::nullopt});
    } else {
      wkl::fail(wkl::ErrorKind::kUsage, "bad-kind: " + k);
    }
    *out = new wkl_tree{std::move(*result)};
    return WKL_OK;
  });
}

}  // extern "C"

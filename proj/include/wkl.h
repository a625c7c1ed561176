/*
 * wkl - analysis of width-bounded trees at a finite depth horizon:
 * level and lookahead widths, maximum antichains, width-narrowing
 * padding, certificate-producing path extraction, and the classic
 * counterexample tree constructions.
 *
 * All functions return a wkl_status; on failure wkl_last_error() holds a
 * message naming the offending node or level. Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * _free function. Handles are immutable after creation and safe to share
 * across threads.
 */

#ifndef WKL_H
#define WKL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wkl_status {
  WKL_OK = 0,
  WKL_PARSE_ERROR = 1,   /* file, format, or tree validation failure */
  WKL_BOUND_ERROR = 2,   /* hypothesis or bound violated */
  WKL_EXTRACT_ERROR = 3, /* extraction failed within the horizon */
  WKL_USAGE_ERROR = 4,   /* malformed request against valid inputs */
} wkl_status;

typedef struct wkl_tree wkl_tree;     /* validated tree truncation */
typedef struct wkl_table wkl_table;   /* predicate or function table */
typedef struct wkl_report wkl_report; /* structured-text report */

const char* wkl_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* wkl_last_error(void);

/* --- trees ------------------------------------------------------------ */

wkl_status wkl_tree_parse(const char* text, wkl_tree** out);
wkl_status wkl_tree_read(const char* path, wkl_tree** out);
wkl_status wkl_tree_write(const wkl_tree* tree, const char* path);
wkl_status wkl_tree_serialize(const wkl_tree* tree, wkl_report** out);
void wkl_tree_free(wkl_tree* tree);

unsigned wkl_tree_horizon(const wkl_tree* tree);
size_t wkl_tree_node_count(const wkl_tree* tree);
int wkl_tree_is_enumerated(const wkl_tree* tree);

/* --- tables ----------------------------------------------------------- */

wkl_status wkl_table_parse(const char* text, wkl_table** out);
wkl_status wkl_table_read(const char* path, wkl_table** out);
void wkl_table_free(wkl_table* table);

/* --- reports ---------------------------------------------------------- */

const char* wkl_report_text(const wkl_report* report);
void wkl_report_free(wkl_report* report);

/* --- analyses ----------------------------------------------------------
 * Each analysis renders its result as a report; see the project README
 * for the line formats. */

wkl_status wkl_describe(const wkl_tree* tree, const char* command_label,
                        wkl_report** out);

wkl_status wkl_widths(const wkl_tree* tree, const unsigned* lookaheads,
                      size_t count, wkl_report** out);

wkl_status wkl_antichain(const wkl_tree* tree, wkl_report** out);

/* max_levels 0 extends the padding schedule as far as the horizon
 * allows. */
wkl_status wkl_pad(const wkl_tree* tree, unsigned c, unsigned max_levels,
                   wkl_tree** padded, wkl_report** out);

/* variant is one of "pf", "ext", "wbd". */
wkl_status wkl_extract(const wkl_tree* tree, const char* variant, unsigned c,
                       unsigned target_len, unsigned lookahead,
                       wkl_report** out);

/* Re-verifies a serialized extract report against the tree. On a clean
 * run with verdict `fail` the verdict report is still produced and
 * WKL_BOUND_ERROR is returned. */
wkl_status wkl_verify(const char* report_text, const wkl_tree* tree,
                      wkl_report** out);

/* nodes_csv: comma-separated node spellings (`-` for the root, digit
 * strings for binary/ternary, dot-separated entries otherwise). */
wkl_status wkl_stability(const wkl_tree* tree, const char* nodes_csv,
                         const unsigned* lookaheads, size_t count,
                         wkl_report** out);

/* The very-smallness check returns WKL_BOUND_ERROR with the verdict
 * report when the hypothesis fails. */
wkl_status wkl_vsmall(const wkl_tree* tree, const wkl_table* f,
                      unsigned start_bound, wkl_report** out);

/* --- generators --------------------------------------------------------
 * kind: "comb", "twochain", "fullbinary", "bristled", "cex-pf",
 * "cex-width", "unique-path", "hat". Unused parameters are ignored. */

typedef struct wkl_gen_params {
  unsigned depth;          /* comb/twochain/fullbinary/bristled/hat */
  unsigned k;              /* bristled: number of chains */
  unsigned horizon;        /* cex-pf/cex-width/unique-path */
  unsigned c;              /* cex-width: cardinality guard */
  uint32_t seed;           /* bristled */
  const wkl_table* table;  /* cex-pf (function), cex-width/unique-path
                              (predicate) */
  const wkl_tree* source;  /* hat: enumerated source tree */
} wkl_gen_params;

wkl_status wkl_generate(const char* kind, const wkl_gen_params* params,
                        wkl_tree** out);

#ifdef __cplusplus
}
#endif

#endif /* WKL_H */

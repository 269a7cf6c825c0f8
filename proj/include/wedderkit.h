/* C interface to the wedderkit library.
 *
 * Groups are opaque handles. Analysis calls return heap-allocated JSON
 * strings (release with wk_string_free); NULL signals an error, after
 * which wk_last_error / wk_last_error_code describe the failure for the
 * calling thread. Config strings are JSON objects; every field is
 * optional and unknown fields are rejected:
 *
 *   {"max_order":512, "chain_budget":1000000, "jobs":1,
 *    "oracle":false, "timings":false,
 *    "tower_bound":1536, "classify_limit":72}
 */
#ifndef WEDDERKIT_H
#define WEDDERKIT_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
  WK_OK = 0,
  WK_ERR_PARSE = 1,
  WK_ERR_GROUP_TOO_LARGE = 2,
  WK_ERR_BOUND_EXCEEDED = 3,
  WK_ERR_NOT_NORMAL = 4,
  WK_ERR_NOT_CYCLIC_QUOTIENT = 5,
  WK_ERR_NOT_SOLVABLE = 6,
  WK_ERR_NOT_CENTRAL_IDEMPOTENT = 7,
  WK_ERR_INCONSISTENT_MULTIPLE = 8,
  WK_ERR_ORACLE_MISMATCH = 9,
  WK_ERR_IO = 10,
  WK_ERR_INVALID_ARGUMENT = 11,
  WK_ERR_INTERNAL = 12,
  WK_ERR_SEARCH_BUDGET_EXCEEDED = 13
};

typedef struct wk_group wk_group;

/* message and code from the most recent failing call on this thread */
const char* wk_last_error(void);
int wk_last_error_code(void);

/* spec grammar: perm:(1,2,3)(4,5);(1,2)  cyclic:n  dihedral:m  sym:n
 * alt:n  quaternion:m  product:<spec>|<spec>  wreath:<spec>~cyclic:p */
wk_group* wk_group_from_spec(const char* spec, int max_order);

/* file format: first line the order n, then n lines of n indices */
wk_group* wk_group_from_cayley_file(const char* path, int max_order);

int wk_group_order(const wk_group* g);
const char* wk_group_name(const wk_group* g);
int wk_group_write_cayley(const wk_group* g, const char* path);
void wk_group_free(wk_group* g);

/* pair classification with flags, idempotent pool and level sets;
 * config "oracle":true adds the character-table cross check */
char* wk_classify_json(const wk_group* g, const char* config_json);

/* every candidate pair with its verdict, idempotent and chain */
char* wk_pairs_json(const wk_group* g, const char* config_json);

/* exact serializations of the pair idempotents */
char* wk_idempotents_json(const wk_group* g, const char* config_json);

/* character table with per-row monomial witnesses */
char* wk_chars_json(const wk_group* g);

/* wreath tower embedding; classifies the tower when its order is within
 * "classify_limit", otherwise reports a notice */
char* wk_embed_json(const wk_group* g, const char* config_json);

/* suite is one of: theorem1, proposition1, lemma2, theorem3_sample,
 * oracle (cross-validation over the built-in corpus) */
char* wk_verify_suite_json(const char* suite, const char* config_json);

/* path: a directory of .cayley files, or a file listing one spec per
 * line; per-entry failures are recorded and the batch continues */
char* wk_corpus_json(const char* path, const char* config_json);

/* plain-text summary of any report produced above */
char* wk_render_text(const char* report_json);

void wk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WEDDERKIT_H */

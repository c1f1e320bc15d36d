/* catverify — exact verification of categorical identities over finite
 * bases, exposed as a C ABI around the C++ engine.
 *
 * Usage pattern:
 *   catv_engine* e = catv_engine_new();
 *   catv_set_option(e, "base", "finset");
 *   catv_load_file(e, "arrow.json");
 *   catv_status rc = catv_check(e, "yoneda");
 *   puts(catv_report(e));
 *   catv_engine_free(e);
 *
 * Status codes double as process exit codes: 0 every check passed,
 * 1 a verification failed, 2 malformed input, 3 a size cap was exceeded.
 */
#ifndef CATVERIFY_H
#define CATVERIFY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct catv_engine catv_engine;

typedef enum catv_status {
  CATV_OK = 0,
  CATV_CHECK_FAILED = 1,
  CATV_INPUT_ERROR = 2,
  CATV_RESOURCE_ERROR = 3
} catv_status;

catv_engine* catv_engine_new(void);
void catv_engine_free(catv_engine* eng);

/* Configuration and selection, all as strings. Keys:
 *   "base"      "finset" | "finvect"
 *   "p"         prime for finvect (default 2)
 *   "seed"      sampling seed (default 0); identical seed+inputs produce
 *               byte-identical reports
 *   "max-hom"   largest hom-set / candidate family enumerated
 *   "max-elems" largest carrier materialized
 *   "format"    "text" | "records" (one JSON object per line)
 *   "legs"      "0" | "1": print universal-map legs from compute
 *   "category", "object", "M", "N", "P", "Y", "phi": entity selection by
 *               name (loaded entities, or built-in fixture categories
 *               terminal|arrow|idempotent|square|chain3|empty)
 *   "samples", "max-size": sampling breadth for check suites
 */
catv_status catv_set_option(catv_engine* eng, const char* key, const char* value);

/* Entities are JSON documents with one top-level key: "category",
 * "functor", "cat_functor" or "nat_trans". Files referencing other entities
 * by name must be loaded after them. */
catv_status catv_load_file(catv_engine* eng, const char* path);
catv_status catv_load_string(catv_engine* eng, const char* text, const char* origin);

/* Law-checks every loaded entity; the per-entity outcome is in the report. */
catv_status catv_validate(catv_engine* eng);

/* suite: coherence | module | yoneda | density | eval-adjunction | kan |
 * closed. The report (see catv_report) gets one line per checked identity
 * and a summary. */
catv_status catv_check(catv_engine* eng, const char* suite);

/* what: end | coend | map | kan-right | internal-hom. The computed carrier
 * description lands in the report buffer. */
catv_status catv_compute(catv_engine* eng, const char* what);

/* The last report/computation output; owned by the engine, valid until the
 * next call on it. Never NULL. */
const char* catv_report(const catv_engine* eng);

/* Explanation of the last non-OK status; empty when the last call passed. */
const char* catv_last_error(const catv_engine* eng);

const char* catv_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CATVERIFY_H */

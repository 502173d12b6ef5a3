/* Copyright 2026 The qcv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the qcv shared library.
 *
 * Conventions: functions returning a pointer return NULL on failure;
 * functions returning qcv_status return QCV_OK on success. In both cases
 * qcv_last_error() carries a thread-local description of the most recent
 * failure. Strings returned as char* are owned by the caller and must be
 * released with qcv_string_free(); handles with the matching *_free().
 */

#ifndef QCV_H
#define QCV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcv_status {
  QCV_OK = 0,
  QCV_ERROR_INVALID_ARGUMENT = 1,
  QCV_ERROR_PARSE = 2,
  QCV_ERROR_UNSUPPORTED = 3,
  QCV_ERROR_INTERNAL = 4
} qcv_status;

typedef enum qcv_rule { QCV_RULE_101 = 0, QCV_RULE_PROJECTOR = 1 } qcv_rule;
typedef enum qcv_search_mode { QCV_SEQUENTIAL = 0, QCV_PARALLEL = 1 } qcv_search_mode;
typedef enum qcv_verdict { QCV_UNCOLORABLE = 0, QCV_COLORABLE = 1 } qcv_verdict;

typedef struct qcv_graph qcv_graph;
typedef struct qcv_certificate qcv_certificate;
typedef struct qcv_model qcv_model;

const char* qcv_version(void);
/* Thread-local message for the most recent failure; never NULL. */
const char* qcv_last_error(void);
void qcv_string_free(char* s);

/* ---- quantum identity suite ------------------------------------------- */

/* JSON report: {"seed", "all_pass", "checks": [{"name", "residual",
 * "tolerance", "pass"}]}. tolerance_override <= 0 means per-check defaults. */
char* qcv_quantum_suite(uint64_t seed, double tolerance_override);

/* ---- exact ray sets and colorability ----------------------------------- */

qcv_graph* qcv_graph_peres33(void);
/* Ray-file text: one ray per line, three coordinates over Q(sqrt 2)
 * (`1 -1 r2`, `1/2 0 -3r2`), '#' comments. */
qcv_graph* qcv_graph_from_ray_text(const char* text);
void qcv_graph_free(qcv_graph* g);
int qcv_graph_ray_count(const qcv_graph* g);
int qcv_graph_edge_count(const qcv_graph* g);
int qcv_graph_triad_count(const qcv_graph* g);
/* Canonical ray listing, one per line. */
char* qcv_graph_rays(const qcv_graph* g);

qcv_certificate* qcv_search(const qcv_graph* g, qcv_rule rule, qcv_search_mode mode);
void qcv_certificate_free(qcv_certificate* c);
qcv_verdict qcv_certificate_verdict(const qcv_certificate* c);
char* qcv_certificate_to_json(const qcv_certificate* c);
qcv_certificate* qcv_certificate_from_json(const char* text);
/* QCV_OK when the certificate verifies against the graph; the error message
 * carries the reason otherwise. */
qcv_status qcv_verify_certificate(const qcv_graph* g, const qcv_certificate* c);

/* ---- hidden-variable models -------------------------------------------- */

/* state: "singlet" or "ks". menus_json: {"a": [setting...], "b": [...]} with
 * setting = {"id", "observable": {"kind": "sigma"|"component"|"squared",
 * "spin": "half"|"one", "direction": [x,y,z]}}. */
qcv_model* qcv_model_synthesize(const char* state, const char* menus_json);
qcv_model* qcv_model_from_json(const char* text);
char* qcv_model_to_json(const qcv_model* m);
void qcv_model_free(qcv_model* m);

/* Full audit battery; JSON report plus flags:
 * {"report": {...}, "error": bool, "violation": bool}. */
char* qcv_model_audit(const qcv_model* m);

/* Context-flip report for one setting/outcome. */
char* qcv_model_flips(const qcv_model* m, const char* setting_id, int outcome);

/* ---- counterfactual evaluation ------------------------------------------ */

/* Scenario document (see library docs): either {"epr": {"k","l"}} or a
 * generic {"actual", "phi", "psi", "policy"} query. */
char* qcv_cf_eval(const qcv_model* m, const char* scenario_json);

#ifdef __cplusplus
}
#endif

#endif /* QCV_H */

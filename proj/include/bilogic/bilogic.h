/* Copyright 2026 The bilogic Authors
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

/*
 * C interface to the bilogic library.
 *
 * Objects are opaque handles. Every fallible call returns a bl_status; on
 * failure the session records a message (bl_last_error), a 1-based column
 * for parse errors and the required model count for budget refusals.
 * Structured results are JSON documents returned as heap strings that the
 * caller releases with bl_string_free.
 *
 * A session is not thread-safe; formulas and models are immutable after
 * creation and may be shared between sessions.
 */

#ifndef BILOGIC_BILOGIC_H
#define BILOGIC_BILOGIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BILOGIC_BUILDING)
#define BL_API __declspec(dllexport)
#else
#define BL_API __declspec(dllimport)
#endif
#else
#define BL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bl_status {
  BL_OK = 0,
  BL_ERR_INVALID_ARGUMENT = 1, /* bad option, assignment or handle */
  BL_ERR_PARSE = 2,            /* syntax, arity or symbol clash */
  BL_ERR_MODEL = 3,            /* malformed or invalid model */
  BL_ERR_EVAL = 4,             /* unassigned variable, wrong mode, ... */
  BL_ERR_BUDGET = 5,           /* enumeration refused */
  BL_ERR_IO = 6,
  BL_ERR_INTERNAL = 7
} bl_status;

typedef struct bl_session bl_session;
typedef struct bl_formula bl_formula;
typedef struct bl_model bl_model;

BL_API const char* bl_version(void);
BL_API const char* bl_status_string(bl_status status);
BL_API void bl_string_free(char* s);

/* --- sessions ------------------------------------------------------------ */

/* Defaults: mode bd4, free logic on, grid 10, max size 3, workers 1,
 * budget 10^7, no explicit profile. Returns NULL on allocation failure. */
BL_API bl_session* bl_session_create(void);
BL_API void bl_session_destroy(bl_session* session);

BL_API bl_status bl_session_set_mode(bl_session* session, const char* mode); /* "bd4" | "lbd" */
BL_API bl_status bl_session_set_free_logic(bl_session* session, int enabled);
BL_API bl_status bl_session_set_grid(bl_session* session, int grid);
BL_API bl_status bl_session_set_max_size(bl_session* session, unsigned max_size);
BL_API bl_status bl_session_set_workers(bl_session* session, unsigned workers);
BL_API bl_status bl_session_set_budget(bl_session* session, uint64_t budget);
/* Comma-separated subset of existence,normality,noncontradiction ("" or
 * "none" for the empty set, "all" for every schema). Without a profile,
 * entailment uses none and theory checking uses all. */
BL_API bl_status bl_session_set_profile(bl_session* session, const char* profile);

BL_API const char* bl_last_error(const bl_session* session);
/* 1-based column of the last parse error, 0 if the last error was not one. */
BL_API int bl_last_error_column(const bl_session* session);
/* Model count required by the last budget refusal, 0 otherwise. */
BL_API uint64_t bl_last_error_required(const bl_session* session);

/* --- formulas ------------------------------------------------------------ */

/* Parses in the session's mode. With a model, its constants and predicates
 * take part in symbol resolution. */
BL_API bl_status bl_formula_parse(bl_session* session, const char* text, const bl_model* context,
                                  bl_formula** out);
BL_API void bl_formula_destroy(bl_formula* formula);

/* {"formula", "ast", "desugared", "desugared_ast", "free_variables",
 *  "signature": {"predicates": {name: arity}, "constants": [...]}} */
BL_API bl_status bl_formula_describe(bl_session* session, const bl_formula* formula,
                                     char** json_out);

/* {"mode", "grid", "atoms", "rows": [{"inputs": [...], "value": v}]};
 * values are glyphs or [pos, neg]. */
BL_API bl_status bl_truth_table(bl_session* session, const bl_formula* formula, char** json_out);

/* --- models -------------------------------------------------------------- */

BL_API bl_status bl_model_load_file(bl_session* session, const char* path, bl_model** out);
BL_API bl_status bl_model_load_json(bl_session* session, const char* json, bl_model** out);
BL_API bl_status bl_model_to_json(bl_session* session, const bl_model* model, char** json_out);
BL_API void bl_model_destroy(bl_model* model);
/* "bd4" or "lbd"; NULL for a NULL model. */
BL_API const char* bl_model_mode(const bl_model* model);

/* Checks the model against the symbols of the given formulas and, when the
 * session has a profile, the selected axiom schemas. *valid is 1 when there
 * are no violations. JSON: [{"kind", "message", "symbol", "tuple", "axiom"}]. */
BL_API bl_status bl_model_validate(bl_session* session, const bl_model* model,
                                   const bl_formula* const* formulas, size_t count, char** json_out,
                                   int* valid);

/* --- evaluation ---------------------------------------------------------- */

/* Assignments are "variable=element" strings. JSON: {"value", "pos", "neg",
 * "designated", "normal", "gappy", "glutty", "environment"}. */
BL_API bl_status bl_eval(bl_session* session, const bl_model* model, const bl_formula* formula,
                         const char* const* assignments, size_t count, char** json_out);

/* {"free_variables", "results": [{"environment", "value", ...}]} over every
 * assignment of the free variables. */
BL_API bl_status bl_eval_all(bl_session* session, const bl_model* model,
                             const bl_formula* formula, char** json_out);

/* Per-schema report {"mode", "profile", "schemas": [{"axiom", "pass",
 * "failures": [{"predicate", "tuple"}]}], "existence_normal_not_bivalent",
 * "all_pass"}. Fails with BL_ERR_INVALID_ARGUMENT when the model has no E!. */
BL_API bl_status bl_check_theory(bl_session* session, const bl_model* model, char** json_out,
                                 int* all_pass);

/* --- search -------------------------------------------------------------- */

/* Bounded entailment with the session's mode, bound, grid, profile,
 * workers and budget. *holds is 1 for holds-up-to-bound. When witness_out
 * is non-NULL it receives the countermodel (or NULL). */
BL_API bl_status bl_entail(bl_session* session, const bl_formula* const* premises, size_t count,
                           const bl_formula* conclusion, char** verdict_json, int* holds,
                           bl_model** witness_out);

#ifdef __cplusplus
}
#endif

#endif /* BILOGIC_BILOGIC_H */

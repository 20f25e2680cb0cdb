// Copyright 2026 The boadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOADD_BOADD_H_
#define BOADD_BOADD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BOADD_API __declspec(dllexport)
#else
#define BOADD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct boadd_code boadd_code;
typedef struct boadd_boa boadd_boa;
typedef struct boadd_schedule boadd_schedule;

typedef enum boadd_status {
  BOADD_OK = 0,
  BOADD_ERR_INVALID_ARGUMENT = 1,
  BOADD_ERR_PARSE = 2,
  BOADD_ERR_BUDGET = 3,
  BOADD_ERR_IO = 4,
  BOADD_ERR_MISMATCH = 5,
  BOADD_ERR_INTERNAL = 6
} boadd_status;

typedef enum boadd_rep_mode { BOADD_REP_WEYL = 0, BOADD_REP_X_ONLY = 1 } boadd_rep_mode;

typedef enum boadd_sim_mode { BOADD_SIM_FULL = 0, BOADD_SIM_PER_TERM = 1 } boadd_sim_mode;

typedef struct boadd_sim_options {
  uint64_t seed;
  size_t locality;
  int diagonal;           /* nonzero: real diagonal terms only */
  boadd_sim_mode mode;
  int quadrature_nodes;   /* 0: analytic slot integrals */
} boadd_sim_options;

/* Message for the most recent failure on the calling thread. */
BOADD_API const char* boadd_last_error(void);
BOADD_API const char* boadd_status_string(boadd_status status);
BOADD_API const char* boadd_version(void);
/* Releases strings returned through char** out-parameters. */
BOADD_API void boadd_string_free(char* s);

/* Codes */
BOADD_API boadd_status boadd_code_hamming_dual(unsigned q, size_t n, boadd_code** out);
BOADD_API boadd_status boadd_code_bch_ext(unsigned q, int m, int designed, boadd_code** out);
BOADD_API boadd_status boadd_code_builtin(const char* name, boadd_code** out);
BOADD_API boadd_status boadd_code_load(const char* path, boadd_code** out);
BOADD_API boadd_status boadd_code_parse(const char* text, boadd_code** out);
BOADD_API boadd_status boadd_code_dual(const boadd_code* code, boadd_code** out);
BOADD_API boadd_status boadd_code_save(const boadd_code* code, const char* path);
BOADD_API boadd_status boadd_code_info(const boadd_code* code, unsigned* q, size_t* n, size_t* k);
BOADD_API boadd_status boadd_code_encode(const boadd_code* code, const unsigned* msg, size_t k,
                                         unsigned* out, size_t n);
/* JSON {"q","n","k","distance","dual_distance","strength","label"} */
BOADD_API boadd_status boadd_code_report(const boadd_code* code, char** json);
/* JSON {"applicable","holds","bound","slack","k"} */
BOADD_API boadd_status boadd_code_bound_check(const boadd_code* code, int designed, int m,
                                              char** json);
BOADD_API void boadd_code_free(boadd_code* code);

/* Arrays */
BOADD_API boadd_status boadd_boa_build(const boadd_code* code, boadd_boa** out);
BOADD_API boadd_status boadd_boa_from_codewords(const boadd_code* code, boadd_boa** out);
BOADD_API boadd_status boadd_boa_pad(const boadd_boa* boa, size_t n_target, boadd_boa** out);
BOADD_API boadd_status boadd_boa_load(const char* path, boadd_boa** out);
BOADD_API boadd_status boadd_boa_parse(const char* text, boadd_boa** out);
BOADD_API boadd_status boadd_boa_save(const boadd_boa* boa, const char* path);
BOADD_API boadd_status boadd_boa_save_csv(const boadd_boa* boa, const char* path);
BOADD_API boadd_status boadd_boa_info(const boadd_boa* boa, unsigned* q, size_t* n, size_t* N,
                                      size_t* strength, uint64_t* lambda);
/* Copies the n*N entries in row-major order. */
BOADD_API boadd_status boadd_boa_entries(const boadd_boa* boa, unsigned* out, size_t count);
/* ok receives 1 when both the OA and balanced-cycle checks pass. */
BOADD_API boadd_status boadd_boa_verify(const boadd_boa* boa, size_t strength, int* ok,
                                        char** json);
BOADD_API void boadd_boa_free(boadd_boa* boa);

/* Schedules */
BOADD_API boadd_status boadd_schedule_from_boa(const boadd_boa* boa, int d, boadd_rep_mode mode,
                                               double delta, boadd_schedule** out);
BOADD_API boadd_status boadd_schedule_symmetrize(const boadd_schedule* s, boadd_schedule** out);
/* format: "json" or "csv" */
BOADD_API boadd_status boadd_schedule_export(const boadd_schedule* s, const char* format,
                                             char** text);
BOADD_API boadd_status boadd_schedule_import(const char* json, boadd_schedule** out);
BOADD_API boadd_status boadd_schedule_load(const char* path, boadd_schedule** out);
BOADD_API boadd_status boadd_schedule_info(const boadd_schedule* s, size_t* n, size_t* slots,
                                           int* d, boadd_rep_mode* mode, int* symmetrized);
BOADD_API void boadd_schedule_free(boadd_schedule* s);

/* Random local Hamiltonian against the schedule; JSON residual report. */
BOADD_API boadd_status boadd_simulate(const boadd_schedule* s, const boadd_sim_options* options,
                                      double* residual, char** json);

/* Tables */
BOADD_API boadd_status boadd_boa_length(int d, int k, uint64_t* out);
BOADD_API boadd_status boadd_table_text(int d, int l_min, int l_max, int k_min, int k_max,
                                        char** text);

#ifdef __cplusplus
}
#endif

#endif  // BOADD_BOADD_H_

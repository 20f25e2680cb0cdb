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

#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "boadd/boadd.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  boadd_string_free(s);
  return out;
}

std::string tmp_path(const char* name) { return std::string(::testing::TempDir()) + name; }

}  // namespace

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(boadd_version(), "0.1.0");
  EXPECT_NE(std::string(boadd_status_string(BOADD_ERR_PARSE)), "");
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(boadd_code_builtin(nullptr, nullptr), BOADD_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(boadd_last_error()), "");
  unsigned q;
  size_t n, k;
  EXPECT_EQ(boadd_code_info(nullptr, &q, &n, &k), BOADD_ERR_INVALID_ARGUMENT);
  boadd_code_free(nullptr);
  boadd_boa_free(nullptr);
  boadd_schedule_free(nullptr);
}

TEST(CApi, CodeLifecycle) {
  boadd_code* c = nullptr;
  ASSERT_EQ(boadd_code_builtin("example1", &c), BOADD_OK);
  unsigned q;
  size_t n, k;
  ASSERT_EQ(boadd_code_info(c, &q, &n, &k), BOADD_OK);
  EXPECT_EQ(q, 2u);
  EXPECT_EQ(n, 7u);
  EXPECT_EQ(k, 3u);
  unsigned msg[3] = {1, 1, 1}, word[7];
  ASSERT_EQ(boadd_code_encode(c, msg, 3, word, 7), BOADD_OK);
  EXPECT_EQ(std::vector<unsigned>(word, word + 7), (std::vector<unsigned>{1, 1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(boadd_code_encode(c, msg, 2, word, 7), BOADD_ERR_INVALID_ARGUMENT);

  char* json = nullptr;
  ASSERT_EQ(boadd_code_report(c, &json), BOADD_OK);
  auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["dual_distance"], 3);
  EXPECT_EQ(j["strength"], 2);

  boadd_code* d = nullptr;
  ASSERT_EQ(boadd_code_dual(c, &d), BOADD_OK);
  boadd_code_info(d, &q, &n, &k);
  EXPECT_EQ(k, 4u);

  const auto path = tmp_path("c_api_code.txt");
  ASSERT_EQ(boadd_code_save(c, path.c_str()), BOADD_OK);
  boadd_code* back = nullptr;
  ASSERT_EQ(boadd_code_load(path.c_str(), &back), BOADD_OK);
  boadd_code_info(back, &q, &n, &k);
  EXPECT_EQ(k, 3u);
  std::remove(path.c_str());

  boadd_code* bad = nullptr;
  EXPECT_EQ(boadd_code_parse("2 3 2\n1 0\n", &bad), BOADD_ERR_PARSE);
  EXPECT_EQ(bad, nullptr);
  EXPECT_EQ(boadd_code_load("/nonexistent/x", &bad), BOADD_ERR_IO);
  EXPECT_EQ(boadd_code_hamming_dual(4, 6, &bad), BOADD_ERR_INVALID_ARGUMENT);

  boadd_code_free(c);
  boadd_code_free(d);
  boadd_code_free(back);
}

TEST(CApi, BchAndBound) {
  boadd_code* c = nullptr;
  ASSERT_EQ(boadd_code_bch_ext(2, 4, 6, &c), BOADD_OK);
  char* json = nullptr;
  ASSERT_EQ(boadd_code_bound_check(c, 6, 4, &json), BOADD_OK);
  auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["slack"], 0);
  EXPECT_EQ(j["holds"], true);
  boadd_code_free(c);
}

TEST(CApi, BoaPipeline) {
  boadd_code* c = nullptr;
  ASSERT_EQ(boadd_code_builtin("example2", &c), BOADD_OK);
  boadd_boa* a = nullptr;
  ASSERT_EQ(boadd_boa_build(c, &a), BOADD_OK);
  unsigned q;
  size_t n, N, l;
  uint64_t lambda;
  ASSERT_EQ(boadd_boa_info(a, &q, &n, &N, &l, &lambda), BOADD_OK);
  EXPECT_EQ(N, 64u);
  EXPECT_EQ(lambda, 4u);
  std::vector<unsigned> entries(n * N);
  ASSERT_EQ(boadd_boa_entries(a, entries.data(), entries.size()), BOADD_OK);
  EXPECT_EQ(boadd_boa_entries(a, entries.data(), 3), BOADD_ERR_INVALID_ARGUMENT);
  for (size_t i = 0; i < n; ++i) EXPECT_EQ(entries[i * N], 0u);

  int ok = 0;
  char* json = nullptr;
  ASSERT_EQ(boadd_boa_verify(a, 2, &ok, &json), BOADD_OK);
  EXPECT_EQ(ok, 1);
  auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["per_subset"].size(), 10u);
  ASSERT_EQ(boadd_boa_verify(a, 3, &ok, nullptr), BOADD_OK);
  EXPECT_EQ(ok, 0);

  boadd_schedule* s = nullptr;
  ASSERT_EQ(boadd_schedule_from_boa(a, 2, BOADD_REP_WEYL, 1.0, &s), BOADD_OK);
  boadd_schedule* wrong = nullptr;
  EXPECT_EQ(boadd_schedule_from_boa(a, 2, BOADD_REP_X_ONLY, 1.0, &wrong), BOADD_ERR_MISMATCH);

  boadd_sim_options opt{1, 2, 0, BOADD_SIM_FULL, 0};
  double res = -1;
  ASSERT_EQ(boadd_simulate(s, &opt, &res, nullptr), BOADD_OK);
  EXPECT_LE(res, 1e-10);
  opt.quadrature_nodes = 16;
  ASSERT_EQ(boadd_simulate(s, &opt, &res, &json), BOADD_OK);
  EXPECT_LE(res, 1e-9);
  EXPECT_EQ(nlohmann::json::parse(take(json))["method"], "quadrature");

  boadd_schedule* sym = nullptr;
  ASSERT_EQ(boadd_schedule_symmetrize(s, &sym), BOADD_OK);
  size_t sn, slots;
  int d, symmetrized;
  boadd_rep_mode mode;
  ASSERT_EQ(boadd_schedule_info(sym, &sn, &slots, &d, &mode, &symmetrized), BOADD_OK);
  EXPECT_EQ(slots, 128u);
  EXPECT_EQ(symmetrized, 1);
  EXPECT_EQ(mode, BOADD_REP_WEYL);

  char* text = nullptr;
  ASSERT_EQ(boadd_schedule_export(sym, "json", &text), BOADD_OK);
  boadd_schedule* back = nullptr;
  std::string js = take(text);
  ASSERT_EQ(boadd_schedule_import(js.c_str(), &back), BOADD_OK);
  boadd_schedule_info(back, &sn, &slots, &d, &mode, &symmetrized);
  EXPECT_EQ(slots, 128u);
  EXPECT_EQ(boadd_schedule_export(sym, "xml", &text), BOADD_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(boadd_schedule_import("{", &back), BOADD_ERR_PARSE);

  boadd_boa* padded = nullptr;
  ASSERT_EQ(boadd_boa_pad(a, 3, &padded), BOADD_OK);
  boadd_boa_info(padded, &q, &n, &N, &l, &lambda);
  EXPECT_EQ(n, 3u);

  const auto path = tmp_path("c_api.boa");
  ASSERT_EQ(boadd_boa_save(a, path.c_str()), BOADD_OK);
  boadd_boa* loaded = nullptr;
  ASSERT_EQ(boadd_boa_load(path.c_str(), &loaded), BOADD_OK);
  boadd_boa_info(loaded, &q, &n, &N, &l, &lambda);
  std::vector<unsigned> e2(n * N);
  ASSERT_EQ(boadd_boa_entries(loaded, e2.data(), e2.size()), BOADD_OK);
  EXPECT_EQ(e2, entries);
  std::remove(path.c_str());

  boadd_schedule_free(s);
  boadd_schedule_free(sym);
  boadd_schedule_free(back);
  boadd_boa_free(a);
  boadd_boa_free(padded);
  boadd_boa_free(loaded);
  boadd_code_free(c);
}

TEST(CApi, CodewordArrayAndTable) {
  boadd_code* c = nullptr;
  ASSERT_EQ(boadd_code_builtin("example1", &c), BOADD_OK);
  boadd_boa* oa = nullptr;
  ASSERT_EQ(boadd_boa_from_codewords(c, &oa), BOADD_OK);
  int ok = 0;
  ASSERT_EQ(boadd_boa_verify(oa, 2, &ok, nullptr), BOADD_OK);
  // codeword order is not a balanced cycle, but the OA property holds
  char* json = nullptr;
  ASSERT_EQ(boadd_boa_verify(oa, 2, &ok, &json), BOADD_OK);
  auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["oa_ok"], true);
  EXPECT_EQ(j["lambda"], 2);
  boadd_boa_free(oa);
  boadd_code_free(c);

  uint64_t len = 0;
  ASSERT_EQ(boadd_boa_length(3, 2, &len), BOADD_OK);
  EXPECT_EQ(len, 324u);
  char* text = nullptr;
  ASSERT_EQ(boadd_table_text(2, 2, 2, 2, 3, &text), BOADD_OK);
  EXPECT_NE(take(text).find("6-21 H"), std::string::npos);
  EXPECT_EQ(boadd_table_text(7, 2, 2, 2, 3, &text), BOADD_ERR_INVALID_ARGUMENT);
}

// Copyright 2026 The permstat Authors.
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

// Exercises the shared library through its C surface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "permstat/permstat.h"

namespace {

std::string takeString(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  ps_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error text") {
  CHECK(std::strlen(ps_version()) > 0);
  ps_perm* perm = nullptr;
  CHECK(ps_perm_parse("not a perm", &perm) == PS_ERROR_PARSE);
  CHECK(std::strlen(ps_last_error()) > 0);
  CHECK(perm == nullptr);
}

TEST_CASE("permutation lifecycle") {
  ps_perm* perm = nullptr;
  REQUIRE(ps_perm_parse("52718346", &perm) == PS_OK);
  CHECK(ps_perm_size(perm) == 8);
  CHECK(ps_perm_letter(perm, 1) == 5);
  CHECK(ps_perm_letter(perm, 8) == 6);
  CHECK(ps_perm_letter(perm, 0) == 0);
  CHECK(ps_perm_letter(perm, 9) == 0);

  char* text = nullptr;
  REQUIRE(ps_perm_format(perm, &text) == PS_OK);
  CHECK(takeString(text) == "52718346");

  ps_perm* restricted = nullptr;
  REQUIRE(ps_perm_restrict(perm, 5, &restricted) == PS_OK);
  char* restrictedText = nullptr;
  REQUIRE(ps_perm_format(restricted, &restrictedText) == PS_OK);
  CHECK(takeString(restrictedText) == "52134");
  ps_perm_free(restricted);

  const int32_t letters[] = {3, 1, 2};
  ps_perm* built = nullptr;
  REQUIRE(ps_perm_create(letters, 3, &built) == PS_OK);
  CHECK(ps_perm_size(built) == 3);
  ps_perm_free(built);

  ps_perm_free(perm);
}

TEST_CASE("null arguments are argument errors") {
  CHECK(ps_perm_parse(nullptr, nullptr) == PS_ERROR_ARGUMENT);
  ps_perm* perm = nullptr;
  CHECK(ps_perm_parse("123", nullptr) == PS_ERROR_ARGUMENT);
  CHECK(ps_perm_stats(nullptr, nullptr) == PS_ERROR_ARGUMENT);
  REQUIRE(ps_perm_parse("123", &perm) == PS_OK);
  CHECK(ps_perm_stats(perm, nullptr) == PS_ERROR_ARGUMENT);
  ps_perm_free(perm);
}

TEST_CASE("statistic vector") {
  ps_perm* perm = nullptr;
  REQUIRE(ps_perm_parse("13287546", &perm) == PS_OK);
  ps_stat_vector v{};
  REQUIRE(ps_perm_stats(perm, &v) == PS_OK);
  CHECK(v.des == 4);
  CHECK(v.asc == 3);
  CHECK(v.inv == 9);
  CHECK(v.maj == 17);
  CHECK(v.adj == 3);
  CHECK(v.first == 1);
  ps_perm_free(perm);
}

TEST_CASE("labeling, insert and uninsert") {
  ps_perm* perm = nullptr;
  REQUIRE(ps_perm_parse("13287546", &perm) == PS_OK);

  int32_t labels[9] = {};
  REQUIRE(ps_labeling(PS_SCHEME_MAJ, perm, labels, 9) == PS_OK);
  const int32_t expected[] = {5, 6, 4, 7, 3, 2, 1, 8, 0};
  for (int i = 0; i < 9; ++i) CHECK(labels[i] == expected[i]);
  CHECK(ps_labeling(PS_SCHEME_MAJ, perm, labels, 8) == PS_ERROR_ARGUMENT);

  ps_perm* grown = nullptr;
  REQUIRE(ps_insert(PS_SCHEME_STAT, 7, perm, &grown) == PS_OK);
  char* grownText = nullptr;
  REQUIRE(ps_perm_format(grown, &grownText) == PS_OK);
  CHECK(takeString(grownText) == "132987546");

  int32_t label = -1;
  ps_perm* shrunk = nullptr;
  REQUIRE(ps_uninsert(PS_SCHEME_STAT, grown, &label, &shrunk) == PS_OK);
  CHECK(label == 7);
  char* shrunkText = nullptr;
  REQUIRE(ps_perm_format(shrunk, &shrunkText) == PS_OK);
  CHECK(takeString(shrunkText) == "13287546");

  CHECK(ps_insert(PS_SCHEME_STAT, 99, perm, &grown) == PS_ERROR_ARGUMENT);

  ps_perm_free(shrunk);
  ps_perm_free(grown);
  ps_perm_free(perm);
}

TEST_CASE("code words through the C surface") {
  ps_perm* perm = nullptr;
  REQUIRE(ps_perm_parse("52718346", &perm) == PS_OK);
  char* word = nullptr;
  REQUIRE(ps_code_of(PS_SCHEME_STAT, perm, &word) == PS_OK);
  CHECK(takeString(word) == "01112216");

  ps_perm* decoded = nullptr;
  REQUIRE(ps_decode(PS_SCHEME_STAT, "01112216", &decoded) == PS_OK);
  char* decodedText = nullptr;
  REQUIRE(ps_perm_format(decoded, &decodedText) == PS_OK);
  CHECK(takeString(decodedText) == "52718346");
  ps_perm_free(decoded);

  ps_perm* bad = nullptr;
  CHECK(ps_decode(PS_SCHEME_STAT, "02", &bad) == PS_ERROR_PARSE);
  ps_perm_free(perm);
}

TEST_CASE("pattern counting") {
  ps_pattern* pattern = nullptr;
  REQUIRE(ps_pattern_parse("b-ca", &pattern) == PS_OK);
  ps_perm* perm = nullptr;
  REQUIRE(ps_perm_parse("4753162", &perm) == PS_OK);
  int64_t count = -1;
  REQUIRE(ps_count(pattern, perm, &count) == PS_OK);
  CHECK(count == 4);
  ps_perm_free(perm);
  ps_pattern_free(pattern);

  ps_pattern* bad = nullptr;
  CHECK(ps_pattern_parse("ba-b", &bad) == PS_ERROR_PARSE);
}

TEST_CASE("bijections and traces") {
  ps_perm* perm = nullptr;
  REQUIRE(ps_perm_parse("52718346", &perm) == PS_OK);

  ps_perm* image = nullptr;
  REQUIRE(ps_apply(PS_MAP_RHO, perm, &image) == PS_OK);
  char* imageText = nullptr;
  REQUIRE(ps_perm_format(image, &imageText) == PS_OK);
  CHECK(takeString(imageText) == "56128473");
  ps_perm_free(image);

  ps_perm* traced = nullptr;
  ps_trace* trace = nullptr;
  REQUIRE(ps_apply_traced(PS_MAP_RHO, perm, &traced, &trace) == PS_OK);
  REQUIRE(ps_trace_size(trace) == 4);
  int32_t step = 0;
  int32_t digit = 0;
  char* rowText = nullptr;
  REQUIRE(ps_trace_step(trace, 0, &step, &digit, &rowText) == PS_OK);
  CHECK(step == 5);
  CHECK(digit == 2);
  CHECK(takeString(rowText) == "51243");
  CHECK(ps_trace_step(trace, 7, &step, &digit, nullptr) ==
        PS_ERROR_ARGUMENT);
  ps_trace_free(trace);
  ps_perm_free(traced);

  ps_perm* chi = nullptr;
  ps_trace* noTrace = nullptr;
  CHECK(ps_apply_traced(PS_MAP_BURSTEIN, perm, &chi, &noTrace) ==
        PS_ERROR_ARGUMENT);
  REQUIRE(ps_apply(PS_MAP_BURSTEIN, perm, &chi) == PS_OK);
  ps_perm_free(chi);

  ps_perm_free(perm);
}

TEST_CASE("distribution tables over the C surface") {
  ps_table* table = nullptr;
  REQUIRE(ps_distribution("des", 2, 1, &table) == PS_OK);
  char* csv = nullptr;
  REQUIRE(ps_table_format(table, "csv", &csv) == PS_OK);
  CHECK(takeString(csv) == "des,count\n0,1\n1,1\n");
  char* json = nullptr;
  REQUIRE(ps_table_format(table, "json", &json) == PS_OK);
  const std::string jsonText = takeString(json);
  CHECK(jsonText.find("\"rows\"") != std::string::npos);
  char* bad = nullptr;
  CHECK(ps_table_format(table, "xml", &bad) == PS_ERROR_ARGUMENT);
  ps_table_free(table);

  ps_table* invalid = nullptr;
  CHECK(ps_distribution("des,bogus", 3, 1, &invalid) == PS_ERROR_ARGUMENT);
  CHECK(ps_distribution("des", 42, 1, &invalid) == PS_ERROR_ARGUMENT);
}

TEST_CASE("verification over the C surface") {
  ps_report* report = nullptr;
  REQUIRE(ps_verify("involution", 5, 2, &report) == PS_OK);
  CHECK(ps_report_passed(report) == 1);
  CHECK(ps_report_cases(report) == 120);
  CHECK(ps_report_failure_count(report) == 0);
  char* text = nullptr;
  REQUIRE(ps_report_format(report, &text) == PS_OK);
  const std::string jsonText = takeString(text);
  CHECK(jsonText.find("\"passed\":true") != std::string::npos);
  ps_report_free(report);

  ps_report* invalid = nullptr;
  CHECK(ps_verify("bogus", 5, 1, &invalid) == PS_ERROR_ARGUMENT);
}

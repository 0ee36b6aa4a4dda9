/* Copyright (C) 2026 The chartwist authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chartwist/chartwist.h"

#include <string>
#include <vector>

namespace {

std::string render(cw_result *r, cw_format f) {
  const char *text = nullptr;
  REQUIRE(cw_result_render(r, f, &text) == CW_OK);
  return text;
}

} // namespace

TEST_CASE("config round trip and environment defaults") {
  cw_config *c = nullptr;
  REQUIRE(cw_config_new(&c) == CW_OK);
  uint64_t v = 0;
  CHECK(cw_config_set(c, CW_SEED, 42) == CW_OK);
  CHECK(cw_config_get(c, CW_SEED, &v) == CW_OK);
  CHECK(v == 42);
  CHECK(cw_config_set(c, static_cast<cw_setting>(99), 1) == CW_ERR_INVALID_ARGUMENT);
  CHECK(cw_config_get(nullptr, CW_SEED, &v) == CW_ERR_NULL_ARGUMENT);
  cw_config_free(c);
}

TEST_CASE("groups") {
  cw_group *g = nullptr;
  REQUIRE(cw_group_parse(nullptr, "S4", &g) == CW_OK);
  uint64_t n = 0;
  CHECK(cw_group_order(g, &n) == CW_OK);
  CHECK(n == 24);
  CHECK(cw_group_class_count(g, &n) == CW_OK);
  CHECK(n == 5);
  cw_group_free(g);

  cw_group *bad = nullptr;
  CHECK(cw_group_parse(nullptr, "perm:(1 2", &bad) == CW_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(cw_last_error()).size() > 0);
  CHECK(cw_group_parse(nullptr, "D5", &bad) == CW_ERR_UNKNOWN_NAME);
  CHECK(cw_status_exit_code(CW_ERR_PARSE) == 2);
  CHECK(cw_status_exit_code(CW_ERR_ORDER_CAP) == 3);
  CHECK(cw_status_exit_code(CW_ERR_NOT_RIGID) == 1);
  CHECK(std::string(cw_status_name(CW_ERR_SEARCH_BUDGET)) == "search budget exceeded");
}

TEST_CASE("order cap through the config") {
  cw_config *c = nullptr;
  REQUIRE(cw_config_new(&c) == CW_OK);
  cw_config_set(c, CW_ORDER_CAP, 100);
  cw_result *r = nullptr;
  CHECK(cw_table(c, "S5", &r) == CW_ERR_ORDER_CAP);
  CHECK(r == nullptr);
  cw_config_free(c);
}

TEST_CASE("table renderings") {
  cw_result *r = nullptr;
  REQUIRE(cw_table(nullptr, "S4", &r) == CW_OK);
  const std::string pretty = render(r, CW_FORMAT_PRETTY);
  CHECK(pretty.find("chi_5 | 3 -1 -1  0  1") != std::string::npos);
  CHECK(render(r, CW_FORMAT_CSV).rfind("class,1,2A,2B,3A,4A\n", 0) == 0);
  CHECK(render(r, CW_FORMAT_JSON).find("\"irreducibles\"") != std::string::npos);
  CHECK(cw_result_negative(r) == 0);
  const char *text = nullptr;
  CHECK(cw_result_render(r, static_cast<cw_format>(7), &text) == CW_ERR_INVALID_ARGUMENT);
  cw_result_free(r);
}

TEST_CASE("iso and negatives") {
  cw_result *r = nullptr;
  REQUIRE(cw_iso(nullptr, "C3", "C4", 0, &r) == CW_OK);
  CHECK(cw_result_negative(r) == 1);
  cw_result_free(r);
  REQUIRE(cw_iso(nullptr, "S4", "S4", CW_ISO_ALL | CW_ISO_CHECK_GROUP_INDUCED, &r) == CW_OK);
  CHECK(render(r, CW_FORMAT_JSON).find("\"group_induced\": false") != std::string::npos);
  cw_result_free(r);
}

TEST_CASE("semirings through JSON text") {
  cw_result *r = nullptr;
  REQUIRE(cw_semiring_fusion(nullptr, "S3", &r) == CW_OK);
  const std::string json = render(r, CW_FORMAT_JSON);
  cw_result_free(r);
  REQUIRE(cw_semiring_validate(nullptr, json.c_str(), &r) == CW_OK);
  CHECK(cw_result_negative(r) == 0);
  cw_result_free(r);
  REQUIRE(cw_semiring_spectrum(nullptr, json.c_str(), &r) == CW_OK);
  CHECK(render(r, CW_FORMAT_JSON).find("\"points\"") != std::string::npos);
  cw_result_free(r);
  CHECK(cw_semiring_validate(nullptr, "{not json", &r) == CW_ERR_PARSE);
}

TEST_CASE("twist, hopf and permutation characters") {
  cw_result *r = nullptr;
  REQUIRE(cw_twist(nullptr, "E2^2", "auto", "symplectic", 1, &r) == CW_OK);
  const std::string j = render(r, CW_FORMAT_JSON);
  CHECK(j.find("\"eq3_phi1\": true") != std::string::npos);
  CHECK(j.find("\"twist\"") != std::string::npos);
  cw_result_free(r);
  CHECK(cw_twist(nullptr, "Q8", "auto", "symplectic", 0, &r) == CW_ERR_NO_DUAL_IDENTIFICATION);
  CHECK(cw_twist(nullptr, "D8", "auto", "bogus", 0, &r) == CW_ERR_INVALID_ARGUMENT);
  REQUIRE(cw_hopf_check(nullptr, "Q8", &r) == CW_OK);
  CHECK(cw_result_negative(r) == 0);
  cw_result_free(r);
  REQUIRE(cw_permchar(nullptr, "S4", "regular", "natural", &r) == CW_OK);
  CHECK(cw_result_negative(r) == 1);
  cw_result_free(r);
  CHECK(cw_permchar(nullptr, "S4", "cosets:(1 5)", nullptr, &r) != CW_OK);
}

TEST_CASE("null arguments") {
  cw_result *r = nullptr;
  CHECK(cw_table(nullptr, nullptr, &r) == CW_ERR_NULL_ARGUMENT);
  CHECK(cw_table(nullptr, "S3", nullptr) == CW_ERR_NULL_ARGUMENT);
  CHECK(cw_result_negative(nullptr) == 0);
  cw_result_free(nullptr);
  cw_group_free(nullptr);
  cw_config_free(nullptr);
}

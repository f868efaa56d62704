#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "apolar/apolar.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  apolar_string_free(s);
  return out;
}

std::string fixture(const char* name) { return std::string(APOLAR_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(CApiForm, ParseLengthAndIdeal) {
  apolar_form* f = nullptr;
  ASSERT_EQ(apolar_form_parse("1,0,0,1", &f), APOLAR_OK);
  unsigned v = 0;
  EXPECT_EQ(apolar_form_degree(f, &v), APOLAR_OK);
  EXPECT_EQ(v, 3u);
  EXPECT_EQ(apolar_form_length(f, &v), APOLAR_OK);
  EXPECT_EQ(v, 2u);
  char* json = nullptr;
  ASSERT_EQ(apolar_form_ideal_json(f, &json), APOLAR_OK);
  auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["s"], 2);
  EXPECT_EQ(j["alpha"], nlohmann::json::parse(R"(["0","1","0"])"));
  EXPECT_EQ(j["hilbert"], nlohmann::json::parse("[1,2,2,1,0]"));
  ASSERT_EQ(apolar_form_decompose_json(f, &json), APOLAR_OK);
  j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["length"], 2);
  EXPECT_EQ(j["terms"].size(), 2u);
  apolar_form_free(f);
}

TEST(CApiForm, Errors) {
  apolar_form* f = nullptr;
  EXPECT_EQ(apolar_form_parse("1,x", &f), APOLAR_PARSE_ERROR);
  EXPECT_EQ(f, nullptr);
  EXPECT_STRNE(apolar_last_error(), "");
  EXPECT_EQ(apolar_form_parse(nullptr, &f), APOLAR_INVALID_ARGUMENT);
  ASSERT_EQ(apolar_form_parse("0,-2,0,2", &f), APOLAR_OK);  // -6 x^2 y + 2 y^3, alpha = s^2 + t^2
  char* json = nullptr;
  EXPECT_EQ(apolar_form_decompose_json(f, &json), APOLAR_NOT_SPLIT_OVER_Q);
  apolar_form_free(f);
  ASSERT_EQ(apolar_form_parse("0,0,0,0", &f), APOLAR_OK);
  unsigned v = 0;
  EXPECT_EQ(apolar_form_length(f, &v), APOLAR_ZERO_FORM);
  apolar_form_free(f);
  apolar_form_free(nullptr);
}

TEST(CApiCenter, SplittingsAndQueries) {
  apolar_center* c = nullptr;
  ASSERT_EQ(apolar_center_load(fixture("rank3_n7.txt").c_str(), &c), APOLAR_OK);
  unsigned n = 0, k = 0;
  EXPECT_EQ(apolar_center_dims(c, &n, &k), APOLAR_OK);
  EXPECT_EQ(n, 7u);
  EXPECT_EQ(k, 2u);
  int buf[8];
  size_t count = 0;
  ASSERT_EQ(apolar_splitting(c, APOLAR_NORMAL, buf, 8, &count), APOLAR_OK);
  ASSERT_EQ(count, 4u);
  EXPECT_EQ(std::vector<int>(buf, buf + 4), (std::vector<int>{13, 9, 9, 9}));
  EXPECT_EQ(apolar_splitting(c, APOLAR_TANGENT, buf, 2, &count), APOLAR_BUFFER_TOO_SMALL);
  EXPECT_EQ(count, 5u);
  ASSERT_EQ(apolar_splitting(c, APOLAR_TANGENT, buf, 8, &count), APOLAR_OK);
  EXPECT_EQ(std::vector<int>(buf, buf + 5), (std::vector<int>{10, 8, 8, 8, 8}));
  unsigned r = 0;
  EXPECT_EQ(apolar_rank_at_twist_zero(c, APOLAR_NORMAL, &r), APOLAR_OK);
  EXPECT_EQ(r, 3u);
  unsigned ker = 0, coker = 0;
  EXPECT_EQ(apolar_section_dims(c, APOLAR_NORMAL, 1, &ker, &coker), APOLAR_OK);
  // h0 - h1 = -4 + 4 * 2
  EXPECT_EQ(int(ker) - int(coker), 4);
  int flag = -1;
  EXPECT_EQ(apolar_immersion_check(c, &flag), APOLAR_OK);
  EXPECT_EQ(flag, 1);
  EXPECT_EQ(apolar_codim2_class(c, &flag), APOLAR_OK);
  EXPECT_EQ(flag, 5);
  char* json = nullptr;
  ASSERT_EQ(apolar_profile_json(c, &json), APOLAR_OK);
  auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["min_degree"], 3);
  EXPECT_EQ(j["witness_squarefree"], "yes");
  EXPECT_EQ(j["witness_rational_roots"].size(), 3u);
  ASSERT_EQ(apolar_center_format(c, &json), APOLAR_OK);
  apolar_center* again = nullptr;
  EXPECT_EQ(apolar_center_parse(take(json).c_str(), &again), APOLAR_OK);
  apolar_center_free(again);
  apolar_center_free(c);
}

TEST(CApiCenter, Errors) {
  apolar_center* c = nullptr;
  EXPECT_EQ(apolar_center_load("/nonexistent/center.txt", &c), APOLAR_IO_ERROR);
  EXPECT_EQ(apolar_center_parse("7 2\n1,2\n", &c), APOLAR_PARSE_ERROR);
  // A point of the curve is not a valid center.
  EXPECT_EQ(apolar_center_parse("6 1\n1,0,0,0,0,0,0\n", &c), APOLAR_INVALID_CENTER);
  EXPECT_EQ(apolar_splitting(nullptr, APOLAR_NORMAL, nullptr, 0, nullptr), APOLAR_INVALID_ARGUMENT);
  ASSERT_EQ(apolar_center_parse("6 1\n1,0,0,0,0,0,1\n", &c), APOLAR_OK);
  int cls = 0;
  EXPECT_EQ(apolar_codim2_class(c, &cls), APOLAR_INVALID_ARGUMENT);
  apolar_center_free(c);
}

TEST(CApiCampaign, VerifyAndSweep) {
  char* json = nullptr;
  unsigned bad = 99;
  ASSERT_EQ(apolar_verify_json("rank3", 7, 2, 5, 1, 0, 1, &json, &bad), APOLAR_OK);
  auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(bad, 0u);
  EXPECT_EQ(j["passes"], 5);
  EXPECT_EQ(j["wall_time_ms"], 0);
  EXPECT_EQ(apolar_verify_json("nope", 7, 2, 5, 1, 0, 1, &json, &bad), APOLAR_UNSUPPORTED_THEOREM);
  EXPECT_EQ(apolar_verify_json("rank3", 7, 2, 0, 1, 0, 1, &json, &bad), APOLAR_PARAMETER_OUT_OF_RANGE);

  char* csv = nullptr;
  ASSERT_EQ(apolar_sweep(9, 2, 10, 1, 0, 0, 1, &json, &csv, &bad), APOLAR_OK);
  EXPECT_EQ(bad, 0u);
  j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["rejected"], 0);
  EXPECT_EQ(take(csv).rfind("splitting,count,class\n", 0), 0u);
  EXPECT_EQ(apolar_sweep(9, 2, 0, 1, 0, 0, 1, &json, nullptr, nullptr), APOLAR_PARAMETER_OUT_OF_RANGE);
}

TEST(CApiMisc, CodimAndNames) {
  long v = 0;
  EXPECT_EQ(apolar_codim("normal", 7, 2, 3, &v), APOLAR_OK);
  EXPECT_EQ(v, 7);
  EXPECT_EQ(apolar_codim("tangent", 10, 3, 6, &v), APOLAR_OK);
  EXPECT_EQ(v, 10 * 3 - 9 - 3 - 1);
  EXPECT_EQ(apolar_codim("bogus", 7, 2, 3, &v), APOLAR_INVALID_ARGUMENT);
  EXPECT_STREQ(apolar_status_name(APOLAR_OK), "Ok");
  EXPECT_STREQ(apolar_status_name(APOLAR_DEGENERATE_MAP), "DegenerateMap");
  EXPECT_STREQ(apolar_status_name(APOLAR_IO_ERROR), "IoError");
  EXPECT_STREQ(apolar_status_name(APOLAR_BUFFER_TOO_SMALL), "BufferTooSmall");
}

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "galgebra/group.hpp"
#include "galgebra/report.hpp"

using namespace galg;

namespace {

std::string write_s3_table_file() {
  auto perm_mul = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = a[b[i]];
    return c;
  };
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      auto c = perm_mul(perms[i], perms[j]);
      for (int k = 0; k < 6; ++k)
        if (perms[k] == c) table[i][j] = k;
    }
  Group g = Group::from_table(table, {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
  std::string path = "s3_table.txt";
  std::ofstream out(path);
  g.write_stream(out);
  return path;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("report JSON round-trips byte-identically") {
  ReportOptions opt;
  opt.p = 3;
  opt.n = 1;
  opt.k = 4;
  opt.format = "json";
  CommandResult res = cmd_report(opt);
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc.dump(2) + "\n" == res.output);
  CHECK(doc["regime"] == "semisimple");
  CHECK(doc["result"]["structure"] == "C_2^4 x GL(2,3)^3");
  CHECK(doc["result"]["unit_order"] == "1769472");
}

TEST_CASE("verify passes for semisimple QD_16 and QD_32 reference points") {
  ReportOptions opt;
  opt.format = "json";

  opt.p = 3, opt.n = 1, opt.k = 4;
  CHECK(cmd_verify(opt).exit_code == 0);

  opt.p = 7, opt.n = 1, opt.k = 5;  // c = 11, shape (2,1)x7
  CommandResult res = cmd_verify(opt);
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc["result"]["c"] == 11);
  CHECK(doc["result"]["structure"] == "C_6^4 x GL(2,7)^7");

  opt.p = 3, opt.n = 1, opt.k = 5;  // q = 3: S = (1,2,4)
  res = cmd_verify(opt);
  CHECK(res.exit_code == 0);
  doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc["result"]["s"] == nlohmann::ordered_json::array({1, 2, 4}));
  CHECK(doc["result"]["l"] == 4);
}

TEST_CASE("verify handles the analytic modular QD_32 path") {
  ReportOptions opt;
  opt.p = 2;
  opt.n = 1;
  opt.k = 5;
  opt.format = "json";
  CommandResult res = cmd_verify(opt);
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc["result"]["dim_j"] == 31);
  CHECK(doc["result"]["order_v"] == "2147483648");  // 2^31
  CHECK(doc["result"]["exponent"] == 16);
  CHECK(doc["result"]["nilpotency_class"] == "not computed");
  CHECK(doc["result"]["centrally_metabelian"] == "not computed");
  CHECK(doc["result"]["quotient"] == "C_1");
}

TEST_CASE("semisimple verify over extension fields") {
  ReportOptions opt;
  opt.format = "json";
  opt.p = 3, opt.n = 2, opt.k = 4;  // q = 9 = 1 mod 8
  CommandResult res = cmd_verify(opt);
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc["result"]["c"] == 7);
  CHECK(doc["result"]["s"] == nlohmann::ordered_json::array({1, 1, 1}));
}

TEST_CASE("usage errors exit 2") {
  ReportOptions opt;
  opt.p = 4;  // not prime
  CHECK(cmd_report(opt).exit_code == 2);
  opt.p = 2, opt.k = 6;  // k out of range without a group file
  CHECK(cmd_report(opt).exit_code == 2);
  opt.k = 4, opt.format = "csv";  // csv is table-only
  CHECK(cmd_report(opt).exit_code == 2);
}

TEST_CASE("any-group: S_3 over F_5 verifies, over F_3 is out of scope") {
  std::string path = write_s3_table_file();
  ReportOptions opt;
  opt.p = 5;
  opt.n = 1;
  opt.group_file = path;
  opt.format = "json";
  CommandResult res = cmd_verify(opt);
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc["regime"] == "semisimple");
  CHECK(doc["input"]["group_file"] == path);

  opt.p = 3;  // 3 | 6 but S_3 is not a 3-group
  CHECK(cmd_verify(opt).exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("table for k=4 reproduces the residue case families") {
  CommandResult res = cmd_table(4, {3, 5, 7, 9, 11, 13, 17}, "json");
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc["m"] == 8);
  std::vector<std::vector<int>> expected_s = {{1, 1, 1}, {1, 2}, {1, 2}, {1, 1, 1}, {1, 1, 1}, {1, 2}, {1, 1, 1}};
  REQUIRE(doc["rows"].size() == expected_s.size());
  for (std::size_t i = 0; i < expected_s.size(); ++i) {
    CHECK(doc["rows"][i]["s"].get<std::vector<int>>() == expected_s[i]);
  }
  // JSON round trip for the table output too
  CHECK(doc.dump(2) + "\n" == res.output);
}

TEST_CASE("table for k=5 at q=17") {
  CommandResult res = cmd_table(5, {17}, "json");
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc["rows"][0]["s"].get<std::vector<int>>() == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
  CHECK(doc["rows"][0]["c"] == 11);
  CHECK(doc["rows"][0]["l"] == 1);
}

TEST_CASE("table edge cases: empty list, even q, csv header") {
  CommandResult res = cmd_table(4, {}, "csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "q,q_mod_m,t,l,c,s,structure\n");
  CHECK(cmd_table(4, {6}, "text").exit_code == 2);
  CHECK(cmd_table(6, {3}, "text").exit_code == 2);
}

}  // TEST_SUITE

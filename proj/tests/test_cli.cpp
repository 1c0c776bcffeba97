#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "altbounds/cli.hpp"

using namespace altbounds;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bounds command") {
  const Run r = run_cli({"bounds", "--q", "2", "--n", "6", "--d", "3", "--best"});
  CHECK(r.code == 0);
  CHECK(r.out == "32\n");

  const Run j = run_cli({"bounds", "--q", "2", "--n", "4", "--d", "2", "--json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["best"] == "8");
  CHECK(doc["bounds"]["hoffman"]["exact"]["num"] == "8");
  CHECK(doc["bounds"]["ratio-k2"].contains("na"));
  CHECK(doc["equivalences"]["hoffman=singleton"] == true);
  CHECK(doc["perfectness"] == "perfect-impossible-even-d");

  const Run text = run_cli({"bounds", "--q", "2", "--n", "4", "--d", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("singleton") != std::string::npos);
}

TEST_CASE("big integers are emitted as strings") {
  const Run j = run_cli({"bounds", "--q", "5", "--n", "12", "--d", "1", "--json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["bounds"]["singleton"]["value"].is_string());
  // 5^66 has 47 digits
  CHECK(doc["bounds"]["singleton"]["value"].get<std::string>().size() == 47);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({"bounds", "--q", "2", "--n", "4", "--d", "9"}).code == cli::kExitUsage);
  CHECK(run_cli({"bounds", "--q", "6", "--n", "4", "--d", "1"}).code == cli::kExitUsage);
  CHECK(run_cli({"spectrum", "--q", "1", "--n", "4"}).code == cli::kExitUsage);
  CHECK(run_cli({"nonsense"}).code == cli::kExitUsage);
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"table", "--q", "2", "--n", "4", "--bounds", "bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({"table", "--q", "2", "--n", "4", "--out", "/nonexistent-dir/x.csv"}).code == cli::kExitUsage);
}

TEST_CASE("spectrum command") {
  const Run r = run_cli({"spectrum", "--q", "2", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("theta: 35, 3, -5\n") != std::string::npos);
  CHECK(r.out.find("mult: 1, 35, 28\n") != std::string::npos);
  const Run j = run_cli({"spectrum", "--q", "2", "--n", "4", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["theta"][2] == "-5");
}

TEST_CASE("table csv") {
  const Run r = run_cli({"table", "--q", "2,3", "--n", "4..6", "--d", "all", "--bounds", "singleton,delsarte-lp"});
  REQUIRE(r.code == 0);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    const auto end = r.out.find("\r\n", pos);
    REQUIRE(end != std::string::npos);
    lines.push_back(r.out.substr(pos, end - pos));
    pos = end + 2;
  }
  // (4: 2 d) + (5: 2 d) + (6: 3 d) per q
  CHECK(lines.size() == 1 + 2 * 7);
  CHECK(lines[0].rfind("q,n,d,singleton,delsarte-lp,", 0) == 0);
  CHECK(lines[1].rfind("2,4,1,64,64,", 0) == 0);
  CHECK(lines[2].rfind("2,4,2,8,8,", 0) == 0);

  // cells outside 1 <= d <= n/2 are skipped with a note
  const Run skipped = run_cli({"table", "--q", "2", "--n", "4", "--d", "2..3"});
  CHECK(skipped.code == 0);
  CHECK(skipped.err.find("skip") != std::string::npos);

  const Run empty = run_cli({"table", "--q", "2", "--n", "4", "--d", "3..3"});
  CHECK(empty.code == 0);
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);
}

TEST_CASE("table output is deterministic") {
  const std::vector<std::string> args{"table", "--q", "2,3", "--n", "4..9", "--bounds", "all"};
  const Run a = run_cli(args);
  const Run b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const Run j = run_cli({"table", "--q", "2", "--n", "4..5", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rows"].size() == 4);
}

TEST_CASE("table to file") {
  const std::string path = "altbounds_cli_test_table.csv";
  const Run r = run_cli({"table", "--q", "2", "--n", "4", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run_cli({"table", "--q", "2", "--n", "4"}).out);
  std::remove(path.c_str());
}

TEST_CASE("csv quoting") {
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(cli::csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("verify command") {
  const Run r = run_cli({"verify", "--q", "2", "--n", "4", "--alpha-k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("alpha_1 = 8") != std::string::npos);
  CHECK(run_cli({"verify", "--q", "2", "--n", "8"}).code == cli::kExitResource);
}

TEST_CASE("lp command") {
  const Run r = run_cli({"lp", "--q", "2", "--n", "6", "--d", "3", "--kind", "minor"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value 32\n") != std::string::npos);
  const Run d = run_cli({"lp", "--q", "2", "--n", "4", "--d", "2", "--kind", "delsarte"});
  CHECK(d.out.find("status optimal") != std::string::npos);
  CHECK(d.out.find("value 8\n") != std::string::npos);
}

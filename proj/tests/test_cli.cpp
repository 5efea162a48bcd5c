#include <doctest.h>

#include "rbn/cli.hpp"
#include "rbn/serialize.hpp"

#include <cstdlib>
#include <sstream>

using namespace rbn;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rbn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cohom") {
  const auto r = run({"cohom", "-s", "F2", "-d", "2E+F"});
  CHECK(r.code == 0);
  CHECK(r.out == "h0=2 h1=2 h2=0\n");
  const auto j = run({"cohom", "-s", "blp2:k=2", "-d", "-3L", "--format", "json", "--explain"});
  CHECK(j.code == 0);
  const auto parsed = Json::parse(j.out);
  CHECK(parsed["h2"] == 1);
  CHECK(parsed["method"] == "rules");
  const auto o = run({"cohom", "-s", "blp2:k=4:collinear=1,2,3,4", "-d", "L-E1-E2-E3-E4", "--explain"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("h0=1 h1=2 h2=0\n", 0) == 0);
  CHECK(o.out.find("method: oracle") != std::string::npos);
}

TEST_CASE("oracle and curves") {
  CHECK(run({"oracle", "h0", "-s", "blp2:k=4", "-d", "L-E1-E2-E3-E4"}).out.find('0') != std::string::npos);
  const auto c = run({"curves", "-s", "dp4"});
  CHECK(c.code == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 16);
}

TEST_CASE("wbn verdicts and exit codes") {
  const auto h = run({"wbn", "-s", "dp7", "-c", "r=3;c1=2L;ch2=-6"});
  REQUIRE(h.code == 0);
  const auto j = Json::parse(h.out);
  CHECK(j["status"] == "Holds");
  CHECK(j["witness"]["kind"] == "good_sum");
  CHECK(j["witness"]["modifications"] == 5);

  const auto f = Json::parse(run({"wbn", "-s", "F1", "-c", "r=2;c1=2E-F;chi=0"}).out);
  CHECK(f["status"] == "Fails");
  CHECK(f["obstruction"]["h0_lower_bound"] == 1);

  CHECK(run({"wbn", "-s", "dp6", "-c", "r=2;c1=E1;chi=0"}).code == 1);
  CHECK(run({"wbn", "-s", "F1", "-c", "r=2;c1=2E-F"}).code == 2);
  CHECK(run({"wbn", "-s", "F1", "-c", "r=2;c1=2Q;chi=0"}).code == 2);
  CHECK(run({"wbn", "-s", "dp3", "-c", "r=2;c1=0;chi=0"}).code == 2);
  CHECK(run({"wbn", "-s", "F1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"wbn", "-s", "blp2:k=3", "-c", "r=3;c1=4L-E1-E2-E3;chi=0"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sweep{"wbn", "-s", "F1", "--sweep", "--range", "3"};
  const auto a = run(sweep), b = run(sweep);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1 + 7 * 7);
}

TEST_CASE("JSON round trips") {
  const auto g = run({"goodsum", "-s", "dp7", "--rank", "3", "--c1", "2L"});
  REQUIRE(g.code == 0);
  const auto j = Json::parse(g.out);
  CHECK(j["good"] == true);
  const GoodSum sum = good_sum_from_json(j);
  CHECK(to_string(sum.c1()) == "2L");
  CHECK(to_json(sum)["summands"] == j["summands"]);

  const auto w = Json::parse(run({"wbn", "-s", "dp7", "-c", "r=3;c1=2L;ch2=-6"}).out);
  const ChernCharacter v = character_from_json(Surface::del_pezzo(7), w["witness_for"]);
  CHECK(v.rank() == 3);
  CHECK(v.ch2() == -6);
}

TEST_CASE("resolve") {
  const auto r = run({"resolve", "-s", "blp2:k=2", "-c", "r=2;c1=2L-E1-E2;chi=0"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["feasible"] == true);
  const auto s = run({"resolve", "-s", "blp2:k=2", "-c", "r=2;c1=2L-E1-E2;chi=0", "--solve", "--split", "2"});
  CHECK(s.code == 0);
}

TEST_CASE("oracle prime from the environment") {
  const std::vector<std::string> args{"oracle", "h0", "-s", "blp2:k=1", "-d", "L"};
  ::setenv("RBN_ORACLE_PRIME", "1000001", 1);
  CHECK(run(args).code == 2);
  ::setenv("RBN_ORACLE_PRIME", "1009", 1);
  const auto ok = run(args);
  CHECK(ok.code == 0);
  CHECK(ok.out.find('3') != std::string::npos);
  // the flag wins over the environment
  ::setenv("RBN_ORACLE_PRIME", "1000001", 1);
  auto flagged = args;
  flagged.insert(flagged.end(), {"--prime", "65537"});
  CHECK(run(flagged).code == 0);
  ::unsetenv("RBN_ORACLE_PRIME");
}

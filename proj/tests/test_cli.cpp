#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "gwp1/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = gwp1::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json rows_of(const Result& r) { return nlohmann::ordered_json::parse(r.out).at("rows"); }

std::string key(const nlohmann::ordered_json& row, const std::string& k) { return row.at("keys").at(k); }

}  // namespace

TEST_CASE("invariant: two-point degree-one bracket") {
  Result r = run({"invariant", "--zero", "0", "--inf", "0", "--qmax", "1", "--kind", "connected", "--format", "json"});
  REQUIRE(r.code == 0);
  auto rows = rows_of(r);
  REQUIRE(rows.size() == 1);
  CHECK(key(rows[0], "d") == "1");
  CHECK(key(rows[0], "g") == "0");
  CHECK(rows[0].at("value") == "1");
}

TEST_CASE("invariant: triple products in the unit/hyperplane basis") {
  // <tau_0(1) tau_0(1) tau_0(h)> = 1 and <tau_0(h)^3> = t^2 in genus 0, degree 0
  Result a = run({"invariant", "--qmax", "0", "--zero", "0", "0", "--inf", "0", "--y-basis", "--kind", "connected",
                  "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(rows_of(a).at(0).at("value") == "1");
  Result b = run({"invariant", "--qmax", "0", "--hyper", "0", "0", "0", "--kind", "connected", "--format", "json"});
  REQUIRE(b.code == 0);
  CHECK(rows_of(b).at(0).at("value") == "t^2");
}

TEST_CASE("invariant: no insertions gives e^{q/u^2}") {
  Result r = run({"invariant", "--qmax", "3", "--kind", "disconnected", "--format", "json"});
  REQUIRE(r.code == 0);
  auto rows = rows_of(r);
  REQUIRE(rows.size() == 4);
  const char* want[] = {"1", "1", "1/2", "1/6"};
  for (int d = 0; d <= 3; ++d) {
    CHECK(key(rows[d], "d") == std::to_string(d));
    CHECK(key(rows[d], "g") == std::to_string(1 - d));
    CHECK(rows[d].at("value") == want[d]);
  }
}

TEST_CASE("hurwitz and hodge tables") {
  Result h2 = run({"hurwitz", "--mu", "2", "--genus", "0", "--format", "json"});
  REQUIRE(h2.code == 0);
  CHECK(rows_of(h2).at(0).at("value") == "1/2");
  CHECK(key(rows_of(h2).at(0), "match") == "yes");
  Result h3 = run({"hurwitz", "--mu", "3", "--genus", "0", "--format", "json"});
  CHECK(rows_of(h3).at(0).at("value") == "1");
  Result hod = run({"hodge", "--mu", "1", "--genus", "0", "--format", "json"});
  REQUIRE(hod.code == 0);
  CHECK(rows_of(hod).at(0).at("value") == "1");
  CHECK(key(rows_of(hod).at(0), "operator") == "1");
  // every genus of the window agrees between the two routes
  Result all = run({"hodge", "--mu", "2,1", "--format", "json"});
  CHECK(all.code == 0);
  for (const auto& row : rows_of(all)) CHECK(key(row, "match") == "yes");
}

TEST_CASE("gfun: degree-one zero-point function") {
  Result r = run({"gfun", "--d", "1", "--qmax", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  auto rows = rows_of(r);
  REQUIRE(rows.size() == 1);
  CHECK(key(rows[0], "u") == "-2");
  CHECK(rows[0].at("value") == "1");
  // both routes print the same table
  Result op = run({"gfun", "--n", "1", "--m", "1", "--d", "1", "--qmax", "1", "--uhi", "0", "--zorder", "2"});
  Result loc = run({"gfun", "--n", "1", "--m", "1", "--d", "1", "--qmax", "1", "--uhi", "0", "--zorder", "2", "--route",
                    "localization"});
  CHECK(op.out == loc.out);
  CHECK(op.out.size() > 40);
}

TEST_CASE("verify suites pass and exit 0") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"verify", "routes", "--d", "2"}, {"verify", "commutators", "--kmax", "3"},
        {"verify", "toda", "--qmax", "2", "--budget", "2"}, {"verify", "dressing", "--kmax", "2"},
        {"verify", "pluecker"}, {"verify", "divisor-string"}}) {
    Result r = run(args);
    CHECK_MESSAGE(r.code == 0, args[1] << "\n" << r.out << r.err);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("status=pass") != std::string::npos);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hodge", "--mu", "1", "--unknown-flag"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"hurwitz", "--mu", "2", "--format", "xml"}).code == 2);
  CHECK(run({"invariant", "--zero", "-1"}).code == 2);
  CHECK(run({"gfun", "--n", "4"}).code == 2);
  CHECK(run({"gfun", "--ulo", "3", "--uhi", "1"}).code == 2);
  CHECK(run({"hodge", "--mu", "2,x"}).code == 2);
  Result r = run({"invariant", "--one", "0", "--zero", "0"});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("output is deterministic and JSON round-trips") {
  std::vector<std::string> args{"gfun", "--n", "1", "--d", "1", "--qmax", "1", "--uhi", "0", "--zorder", "2",
                                "--format", "json"};
  Result a = run(args), b = run(args);
  CHECK(a.out == b.out);
  auto j = nlohmann::ordered_json::parse(a.out);
  CHECK(j.dump(2) + "\n" == a.out);
  CHECK(j.at("command") == "gfun");
  CHECK(j.at("truncation").at("q_max") == "1");
  CHECK(j.at("rows").size() > 1);
}

TEST_CASE("csv and text renderings") {
  Result c = run({"hurwitz", "--mu", "2", "--genus", "0", "--format", "csv"});
  CHECK(c.out == "mu,g,b,character,oracle,match,value\n(2),0,1,1/2,1/2,yes,1/2\n");
  Result t = run({"hurwitz", "--mu", "2", "--genus", "0"});
  CHECK(t.out.rfind("# hurwitz", 0) == 0);
  CHECK(t.out.find("mu=(2) g=0 b=1 character=1/2 oracle=1/2 match=yes : 1/2") != std::string::npos);
}

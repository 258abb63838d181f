#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "knotqp/cli.hpp"
#include "knotqp/expr.hpp"
#include "knotqp/format.hpp"

using namespace knotqp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "knotqp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("qp-num") {
  CHECK(cli({"qp-num", "--family", "bmq", "--n", "3"}).out == "q^2 + 1 + q^-2\n");
  CHECK(cli({"qp-num", "--family", "homfly", "--n", "3"}).out == "a^4*t^2 + a^4 + a^4*t^-2\n");
  const Run j = cli({"qp-num", "--family", "h2", "--n", "2", "--format", "json"});
  CHECK(j.code == 0);
  const Json doc = Json::parse(j.out);
  CHECK(doc["family"] == "h2");
  CHECK(doc["n"] == 2);
  CHECK(poly_from_json(doc["poly"]) == parse_poly("q^3 + p"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"qp-num", "--family", "kauffman", "--n", "3"}).code == 2);
  CHECK(cli({"qp-num", "--family", "jones"}).code == 2);
  CHECK(cli({"qp-num", "--family", "jones", "--n", "-1"}).code == 2);
  CHECK(cli({"series", "--invariant", "jones", "--max", "3"}).code == 2);
  CHECK(cli({"series", "--invariant", "jones", "--knots", "--links", "--max", "3"}).code == 2);
  CHECK(cli({"series", "--invariant", "jones", "--links", "--max", "1"}).code == 2);
  CHECK(cli({"verify", "--check", "nope"}).code == 2);
  CHECK(cli({"verify", "--n-max", "0"}).code == 2);
  CHECK(cli({"table", "--invariant", "jones", "--max", "2", "--az"}).code == 2);
  const Run bad = cli({"eval", "(1+t)^(1/2)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  const Run nd = cli({"eval", "(t^2 - 1)/(t - 2)"});
  CHECK(nd.code == 2);
  CHECK(nd.err.find("remainder 3") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("eval") {
  CHECK(cli({"eval", "(q^2 - p^2)/(q - p)"}).out == "p + q\n");
  const Run yes = cli({"eval", "--assert", "(t^3 - t^(-3))/(t - t^(-1)) == t^2 + 1 + t^-2"});
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("true", 0) == 0);
  const Run no = cli({"eval", "--assert", "q^2 + 1 + p^-2 == q^2 + q*p^-1 + p^-2"});
  CHECK(no.code == 1);
  CHECK(no.out.rfind("false", 0) == 0);
}

TEST_CASE("series json output round-trips") {
  const Run r = cli({"series", "--invariant", "homfly", "--links", "--max", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  const InvariantSeries s = series_from_json(Json::parse(r.out));
  CHECK(s.entries == link_series(InvariantKind::Homfly, 6).entries);
  CHECK(to_json(s).dump() + "\n" == r.out);
}

TEST_CASE("table") {
  const Run r = cli({"table", "--invariant", "homfly", "--max", "1", "--format", "text", "--az"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-a^4 + a^2*z^2 + 2*a^2") != std::string::npos);
  const Run c = cli({"table", "--invariant", "alexander", "--max", "1", "--format", "csv"});
  CHECK(c.out == "n,polynomial\n1,\"1\"\n3,\"t - 1 + t^-1\"\n");
}

TEST_CASE("verify") {
  const Run r = cli({"verify", "--n-max", "3"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const Run one = cli({"verify", "--check", "trefoil", "--n-max", "1", "--format", "json"});
  CHECK(one.code == 0);
  CHECK(Json::parse(one.out)["name"] == "trefoil");
}

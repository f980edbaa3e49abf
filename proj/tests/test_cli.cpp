#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "degbell/cli.hpp"

using namespace degbell;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "degbell");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table subcommand") {
  const Run bell = run({"table", "bell", "--n-max", "3", "--lambda", "sym", "--format", "csv"});
  CHECK(bell.code == 0);
  CHECK(bell.out.find("\n3,,5-6*lambda+2*lambda^2\n") != std::string::npos);
  CHECK(run({"table", "stirling2", "--n-max", "2", "--lambda", "1/2"}).out.find("\n2,1,1/2\n") != std::string::npos);
  CHECK(run({"table", "bernoulli", "--n-max", "0"}).out == "n,value\n0,1\n");
  CHECK(run({"table", "bell", "--n-max", "3", "--format", "pretty"}).out.find("2λ²−6λ+5") != std::string::npos);
  const Run json = run({"table", "bracket", "--n-max", "4", "--format", "json"});
  CHECK(parse_table_json(json.out) == make_table("bracket", 4, std::nullopt));
}

TEST_CASE("eval subcommand") {
  CHECK(run({"eval", "--n", "2", "--x", "1", "--lambda", "1/2"}).out == "3/2\n");
  CHECK(run({"eval", "--n", "1", "--x", "5", "--lambda", "17/3"}).out == "5\n");
  CHECK(run({"eval", "--n", "3", "--x", "1", "--lambda", "1/3"}).out == "29/9\n");
  const Run dob = run({"eval", "--n", "3", "--x", "1", "--lambda", "1/3", "--dobinski-terms", "80"});
  CHECK(dob.code == 0);
  CHECK(dob.out.rfind("29/9\nexact ", 0) == 0);
  CHECK(dob.out.find("dobinski") != std::string::npos);
}

TEST_CASE("series subcommand") {
  const Run log2 = run({"series", "loglam", "--order", "2"});
  CHECK(log2.code == 0);
  CHECK(log2.out == "{\"order\":2,\"coeffs\":[[],[[\"1\"]],[[\"-1/2\",\"1/2\"]]]}\n");
  CHECK(run({"series", "elam", "--order", "0"}).out == "{\"order\":0,\"coeffs\":[[[\"1\"]]]}\n");
  const Run bell = run({"series", "bellgf", "--order", "2"});
  CHECK(parse_series_json(bell.out) == make_series("bellgf", 2));
  CHECK(parse_series_json(run({"series", "elam"}).out).order() == kDefaultSeriesOrder);
  CHECK(run({"series", "bernoulligf", "--order", "3", "--format", "csv"}).out.rfind("n,j,value\n0,0,1\n", 0) == 0);
}

TEST_CASE("verify subcommand") {
  const Run eq39 = run({"verify", "eq39", "--n-max", "12"});
  CHECK(eq39.code == 0);
  CHECK(eq39.out.find("PASS  eq39") != std::string::npos);
  const Run json = run({"verify", "eq43", "--n-max", "4", "--format", "json"});
  CHECK(json.code == 0);
  const auto reports = parse_reports_json(json.out);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].pass);
  const Run csv = run({"verify", "all", "--n-max", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(parse_reports_csv(csv.out).size() == 29);
}

TEST_CASE("verification failures exit with code 1") {
  const Run bad = run({"verify", "eq43", "--n-max", "6", "--perturb-stirling2", "3,2", "--format", "json"});
  CHECK(bad.code == 1);
  const auto reports = parse_reports_json(bad.out);
  REQUIRE(reports.size() == 1);
  CHECK(!reports[0].pass);
  CHECK(reports[0].counterexample.has_value());
  CHECK(bad.err.find("eq43") != std::string::npos);
  CHECK(run({"verify", "eq43", "--n-max", "6", "--perturb-stirling2", "3,4"}).code == 2);
  CHECK(run({"verify", "eq43", "--n-max", "6", "--perturb-stirling2", "3"}).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  const Run nosuch = run({"verify", "nosuch"});
  CHECK(nosuch.code == 2);
  CHECK(nosuch.err.find("eq12-vs-eq14") != std::string::npos);
  CHECK(nosuch.out.empty());
  CHECK(run({"table", "nosuch"}).code == 2);
  CHECK(run({"table", "bell", "--lambda", "0.5"}).code == 2);
  CHECK(run({"table", "bell", "--format", "xml"}).code == 2);
  CHECK(run({"eval", "--n", "2", "--x", "1.5", "--lambda", "1"}).code == 2);
  CHECK(run({"eval", "--n", "2", "--x", "1", "--lambda", "sym"}).code == 2);
  CHECK(run({"eval", "--n", "-1", "--x", "1", "--lambda", "0"}).code == 2);
  CHECK(run({"series", "nosuch"}).code == 2);
  CHECK(run({"series", "elam", "--order", "-3"}).code == 2);
  CHECK(run({"verify", "lemma1", "--n-max", "6", "--order", "5"}).code == 2);
  CHECK(run({"verify", "all", "--n-max", "0"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> cmd{"verify", "all", "--n-max", "3", "--format", "json"};
  CHECK(run(cmd).out == run(cmd).out);
  const std::vector<std::string> table{"table", "stirling1", "--n-max", "8", "--format", "json"};
  CHECK(run(table).out == run(table).out);
}

TEST_CASE("environment cap limits default series orders") {
  setenv(kSeriesOrderCapEnv, "5", 1);
  CHECK(parse_series_json(run({"series", "elam"}).out).order() == 5);
  CHECK(parse_series_json(run({"series", "elam", "--order", "9"}).out).order() == 9);
  CHECK(capped_default_order(16) == 5);
  setenv(kSeriesOrderCapEnv, "junk", 1);
  CHECK(capped_default_order(16) == 16);
  unsetenv(kSeriesOrderCapEnv);
  CHECK(capped_default_order(16) == 16);
}

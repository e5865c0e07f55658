#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "lerch/cli.hpp"
#include "lerch/suite.hpp"

using namespace lerch;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lerch");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string strip_wall_time(const std::string& doc) {
  const auto pos = doc.find("\"wall_time\"");
  REQUIRE(pos != std::string::npos);
  const auto end = doc.find('\n', pos);
  return doc.substr(0, pos) + doc.substr(end);
}

}  // namespace

TEST_CASE("parameter literals") {
  CHECK(parse_literal("0.5") == Complex(0.5));
  CHECK(parse_literal("1/4") == Complex(0.25));
  CHECK(std::abs(parse_literal("-2*pi/3") - Complex(-2 * kPi / 3)) < 1e-15);
  CHECK(std::abs(parse_literal("2pi/3") - Complex(2 * kPi / 3)) < 1e-15);
  CHECK(parse_literal("i") == kI);
  CHECK(parse_literal("0.5-0.25i") == Complex(0.5, -0.25));
  CHECK(std::abs(parse_literal("exp(i*pi/3)") - std::polar(1.0, kPi / 3)) < 1e-15);
  CHECK(std::abs(parse_literal("sqrt(2)^2") - 2.0) < 1e-15);
  CHECK_THROWS_AS(parse_literal("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_literal("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_literal("(1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_literal(""), std::invalid_argument);
}

TEST_CASE("glob and metrics") {
  CHECK(glob_match("master_*", "master_euler"));
  CHECK_FALSE(glob_match("master_*", "strip_shift"));
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("series_zeta?_omega4", "series_zeta3_omega4"));
  CHECK(passes(Metric::rel_le, 1e-9, 1.0, 1e-10));
  CHECK_FALSE(passes(Metric::rel_le, 1e-9, 1.0, 1e-8));
  CHECK(passes(Metric::rel_gt, 1e-3, 0.0, 1e-2));
  CHECK(passes(Metric::exact, 0.0, 0.0, 0.0));
  CHECK_FALSE(passes(Metric::exact, 0.0, 1e-300, 0.0));
  CHECK(parse_metric("abs_le") == Metric::abs_le);
}

TEST_CASE("suite check names are unique per parameter point") {
  std::set<std::string> seen;
  for (const auto& c : suite_checks()) {
    std::string key = c.name;
    for (const auto& [k, v] : c.params) key += "," + k + "=" + v;
    CHECK_MESSAGE(seen.insert(key).second, key);
  }
}

TEST_CASE("eval command") {
  auto r = run({"eval", "beta", "s=2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.9159655941772190") != std::string::npos);
  r = run({"eval", "lerch_phi", "a=0", "s=4", "b=2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value          0.0625\n") != std::string::npos);
  r = run({"eval", "l_series", "chi=chi2", "s=1"});
  CHECK(r.out.find("0.6232252401402305") != std::string::npos);
  r = run({"eval", "zeta", "s=3", "--format", "json"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["value"][0].get<double>() == doctest::Approx(1.2020569031595942).epsilon(1e-15));
  CHECK(doc.contains("terms_used"));
  CHECK(doc.contains("error_estimate"));
  r = run({"eval", "polylog", "s=2", "phi=pi/2"});
  CHECK(r.out.find("0.915965594177219") != std::string::npos);
  r = run({"eval", "hurwitz_zeta", "s=2", "b=1/2"});
  CHECK(r.code == 0);
  CHECK(run({"eval", "nosuch", "s=2"}).code == 2);
  CHECK(run({"eval", "beta", "s"}).code == 2);
  CHECK(run({"eval", "beta", "s=2", "t=1"}).code == 2);
  CHECK(run({"eval", "beta", "s=1.5"}).code == 2);
  CHECK(run({"eval", "beta"}).code == 2);
  CHECK(run({"eval", "lerch_phi", "a=2", "s=2", "b=1"}).code == 2);
}

TEST_CASE("series and catalog commands") {
  auto r = run({"series", "euler_zeta3", "--checkpoints", "5,10,20,40"});
  CHECK(r.code == 0);
  r = run({"series", "zeta5_omega4", "--checkpoints", "4,8", "--format", "json"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][1]["digits"].get<double>() - doc["rows"][0]["digits"].get<double>() >= 4.0);
  r = run({"series", "nosuch"});
  CHECK(r.code == 2);
  CHECK(r.err.find("catalog") != std::string::npos);
  CHECK(run({"series", "euler_zeta3", "--checkpoints", "5,x"}).code == 2);
  CHECK(run({"series", "euler_zeta3", "--checkpoints", "10,5"}).code == 2);
  r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("zeta5_omega4") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--tolerance", "-1"}).code == 2);
  CHECK(run({"verify", "--max-terms", "0"}).code == 2);
  CHECK(run({"verify", "--filter", "no_such_check"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--help"}).code == 0);
  const auto list = run({"verify", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("master_bernoulli") != std::string::npos);
  CHECK(list.out.find("beta_sum_log") != std::string::npos);
}

TEST_CASE("verify exit codes and tolerance monotonicity") {
  auto r = run({"verify", "--filter", "master_*"});
  CHECK(r.code == 0);
  r = run({"verify", "--filter", "zeta_from_beta", "--tolerance", "1e-300"});
  CHECK(r.code == 1);
  SuiteConfig strict;
  strict.filter = "s*";
  SuiteConfig loose = strict;
  loose.tolerance = 1e-3;
  const auto a = run_suite(strict);
  const auto b = run_suite(loose);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i)
    if (a.checks[i].pass && a.checks[i].metric != Metric::rel_gt) CHECK(b.checks[i].pass);
}

TEST_CASE("json report round trip and determinism") {
  const auto first = run({"verify", "--filter", "[mz]*", "--format", "json"});
  const auto second = run({"verify", "--filter", "[mz]*", "--format", "json"});
  CHECK(first.code == 0);
  CHECK(strip_wall_time(first.out) == strip_wall_time(second.out));
  const json doc = json::parse(first.out);
  std::size_t pass = 0, fail = 0;
  std::string previous;
  for (const auto& c : doc["checks"]) {
    for (const char* key : {"name", "params", "lhs", "rhs", "abs_err", "rel_err", "pass", "tolerance", "metric"})
      CHECK(c.contains(key));
    CHECK(c["lhs"].size() == 2);
    const Metric m = parse_metric(c["metric"].get<std::string>());
    const bool recomputed =
        passes(m, c["tolerance"].get<double>(), c["abs_err"].get<double>(), c["rel_err"].get<double>());
    CHECK(recomputed == c["pass"].get<bool>());
    (recomputed ? pass : fail)++;
    std::string key = c["name"].get<std::string>();
    CHECK(previous.substr(0, previous.find('|')) <= key);
    previous = key + "|";
  }
  CHECK(doc["pass_count"].get<std::size_t>() == pass);
  CHECK(doc["fail_count"].get<std::size_t>() == fail);
  CHECK(doc["total"].get<std::size_t>() == pass + fail);
  CHECK(doc["config"].contains("max_terms"));
  CHECK(doc["config"].contains("tolerance"));
  CHECK(doc["config"].contains("grids"));
}

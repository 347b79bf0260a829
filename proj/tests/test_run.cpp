#include <gtest/gtest.h>

#include <json.hpp>

#include "eqlv/run.hpp"

using namespace eqlv;
using Json = nlohmann::json;

namespace {

RunConfig cfg(const std::string& command, std::map<std::string, std::string> kv = {}) {
  kv["command"] = command;
  return RunConfig::from_kv(kv);
}

}  // namespace

TEST(Run, KeyValueTextRoundTrip) {
  RunConfig c = cfg("trace-check", {{"demo", "instance"}, {"instance", R"({"m":1,"ops":[{"n":1,"T":[["t"]]}]})"}});
  const std::string text = render_kv_text(c.to_kv());
  EXPECT_EQ(RunConfig::from_kv(parse_kv_text(text)).to_kv(), c.to_kv());
  const auto kv = parse_kv_text("# comment\nq = 3   # trailing\n  prec=\"5\" # quoted\n\nrep = chi:1\n");
  EXPECT_EQ(kv.at("q"), "3");
  EXPECT_EQ(kv.at("prec"), "5");
  EXPECT_EQ(kv.at("rep"), "chi:1");
}

TEST(Run, MalformedConfigIsAUsageError) {
  EXPECT_THROW(parse_kv_text("q 2\n"), ConfigError);
  EXPECT_THROW(parse_kv_text("q = 2\nq = 3\n"), ConfigError);
  EXPECT_THROW(parse_kv_text("module = \"[[\n"), ConfigError);
  EXPECT_THROW(RunConfig::from_kv({{"qq", "2"}}), ConfigError);
  EXPECT_THROW(RunConfig::from_kv({{"prec", "8x"}}), ConfigError);
  EXPECT_THROW(cfg("nothing").validate(), ConfigError);
  EXPECT_THROW(cfg("zeta", {{"q", "4"}}).validate(), ConfigError);
  EXPECT_THROW(cfg("zeta", {{"context", "constant"}}).validate(), ConfigError);
  EXPECT_THROW(cfg("lvalue", {{"context", "constant"}, {"m", "2"}}).validate(), ConfigError);
  EXPECT_THROW(cfg("trace-check", {{"q", "3"}, {"demo", "random"}, {"equivariant", "true"}}).validate(), ConfigError);
  // caught only once the context exists: f = t^2 is not squarefree
  EXPECT_THROW(run(cfg("artin", {{"context", "cyclotomic"}, {"conductor", "t^2"}})), ConfigError);
  EXPECT_THROW(run(cfg("lvalue", {{"rep", "chi:5"}})), ConfigError);
  EXPECT_THROW(run(cfg("class-formula", {{"module", "[[[\"t\",\"1\"]]]"}})), ConfigError);
}

TEST(Run, DocumentedExamplesPass) {
  EXPECT_EQ(run(cfg("zeta", {{"carlitz", "1"}, {"prec", "8"}})).verdict, Verdict::Pass);
  EXPECT_EQ(run(cfg("class-formula", {{"carlitz", "1"}, {"context", "trivial"}, {"prec", "8"}})).verdict, Verdict::Pass);
  EXPECT_EQ(run(cfg("trace-check", {{"demo", "qpower"}, {"prec", "6"}})).verdict, Verdict::Pass);
}

TEST(Run, ReportIsDeterministicAndCarriesItsConfig) {
  for (const RunConfig& c : {cfg("zeta", {{"prec", "6"}}), cfg("artin", {{"context", "cyclotomic"}, {"prec", "5"}}),
                             cfg("lvalue", {{"context", "constant"}, {"prec", "5"}}),
                             cfg("trace-check", {{"demo", "random"}, {"count", "3"}, {"prec", "4"}})}) {
    const RunResult a = run(c), b = run(c);
    EXPECT_EQ(a.json, b.json) << c.command;
    const Json j = Json::parse(a.json);
    EXPECT_EQ(j.at("schema").get<int>(), kReportSchema);
    EXPECT_EQ(j.at("verdict").get<std::string>(), "pass");
    std::map<std::string, std::string> kv;
    for (const auto& [k, v] : j.at("config").items()) kv[k] = v.get<std::string>();
    const RunConfig back = RunConfig::from_kv(kv);
    EXPECT_EQ(back.to_kv(), c.to_kv());
    EXPECT_EQ(run(back).json, a.json);
  }
}

TEST(Run, LedgerSortedByDegreeThenLex) {
  const Json j = Json::parse(run(cfg("zeta", {{"prec", "5"}})).json);
  const auto& led = j.at("euler_product").at("ledger");
  ASSERT_EQ(led.size(), 2u + 1 + 2 + 3 + 6);  // irreducibles over F_2 of degree 1..5
  EXPECT_EQ(led[0].at("prime").get<std::string>(), "t");
  EXPECT_EQ(led[1].at("prime").get<std::string>(), "t+1");
  for (std::size_t i = 1; i < led.size(); ++i) EXPECT_LE(led[i - 1].at("degree").get<int>(), led[i].at("degree").get<int>());
}

TEST(Run, FailingComparisonNamesFirstExponent) {
  auto k = Field::prime(2);
  const Comparison c = compare_mod(parse_laurent(k, "1 + t^-2 + t^-3"), parse_laurent(k, "1 + t^-2"), 6);
  EXPECT_EQ(c.verdict, Verdict::Fail);
  ASSERT_TRUE(c.first_difference);
  EXPECT_EQ(*c.first_difference, -3);
  EXPECT_NE(c.detail.find("t^-3"), std::string::npos);
  EXPECT_EQ(exit_code(Verdict::Pass), 0);
  EXPECT_EQ(exit_code(Verdict::Fail), 1);
  EXPECT_EQ(exit_code(Verdict::Inconclusive), 2);
}

TEST(Run, ExplicitModuleAndInstance) {
  // E(t) = t + t^3 tau has a one-dimensional class module
  const RunResult r = run(cfg("class-formula", {{"module", R"([[["t"]],[["t^3"]]])"}, {"prec", "6"}}));
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_EQ(Json::parse(r.json).at("analytic").at("class_module_dim").get<int>(), 1);
  // tau = S x(t^q) with S of order 3 splits into three twists
  const std::string inst =
      R"({"m":2,"ops":[{"n":1,"T":[["t","1"],["1","t+1"]]}],"generator":[["0","1"],["1","1"]]})";
  const RunResult t = run(cfg("trace-check", {{"demo", "instance"}, {"instance", inst}, {"prec", "5"}}));
  EXPECT_EQ(t.verdict, Verdict::Pass) << t.summary;
  EXPECT_EQ(Json::parse(t.json).at("instances")[0].at("per_character").size(), 3u);
}

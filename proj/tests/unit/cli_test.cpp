#include <gtest/gtest.h>

#include <json.hpp>

#include "bsc/cli.hpp"

using bsc::cli::run;
using nlohmann::json;

TEST(Cli, ProveProved) {
  auto o = run({"prove", "--logic", "K3", "p, p->q", "q"});
  EXPECT_EQ(o.status, 0) << o.err;
  EXPECT_EQ(o.out.rfind("PROVED p, p -> q => q | =>", 0), 0u) << o.out;
  EXPECT_NE(o.out.find("by (->=>|)"), std::string::npos);
}

TEST(Cli, ProveRefuted) {
  auto o = run({"prove", "--logic", "K3", "", "p | ~p"});
  EXPECT_EQ(o.status, 1);
  EXPECT_NE(o.out.find("countermodel: p=u"), std::string::npos) << o.out;
}

TEST(Cli, VerifyRulesL3) {
  auto o = run({"verify-rules", "--logic", "L3"});
  EXPECT_EQ(o.status, 0);
  std::istringstream in(o.out);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    EXPECT_NE(line.find(" sound_and_invertible"), std::string::npos) << line;
    ++n;
  }
  EXPECT_EQ(n, 24);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"prove", "--logic", "K3", "p"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  auto o = run({"prove", "--logic", "Nope", "", "p"});
  EXPECT_EQ(o.status, 2);
  EXPECT_NE(o.err.find("unknown logic"), std::string::npos) << o.err;
  auto p = run({"prove", "--logic", "K3", "", "p &"});
  EXPECT_EQ(p.status, 2);
  EXPECT_NE(p.err.find("offset 3"), std::string::npos) << p.err;
  EXPECT_EQ(run({"prove", "--logic", "K3", "", "box p"}).status, 2);
  EXPECT_EQ(run({"prove", "--logic", "K3", "--mode", "sideways", "", "p"}).status, 2);
}

TEST(Cli, CheckSemanticAgreesWithProve) {
  for (const auto& [logic, g, c] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"K3", "p, p->q", "q"}, {"LP", "p, p->q", "q"}, {"LP", "", "p | ~p"},
           {"L3", "", "p -> p"}, {"PWK", "p", "p | q"}, {"P3", "p & q", "neg_p p"}}) {
    int a = run({"prove", "--logic", logic, g, c}).status;
    int b = run({"check-semantic", "--logic", logic, g, c}).status;
    EXPECT_EQ(a, b) << logic << " " << g << " / " << c;
  }
}

TEST(Cli, Countermodel) {
  auto o = run({"countermodel", "--logic", "K3", "=> p | p =>"});
  EXPECT_EQ(o.status, 1);
  EXPECT_EQ(o.out.rfind("p=u\n", 0), 0u) << o.out;
  EXPECT_EQ(run({"countermodel", "--logic", "K3", "p => p | =>"}).status, 0);
  EXPECT_EQ(run({"countermodel", "--logic", "K3", "p", "p | q"}).status, 0);
}

TEST(Cli, InterpolateAndTables) {
  auto o = run({"interpolate", "--logic", "I1", "p & q", "p | q"});
  EXPECT_EQ(o.status, 0) << o.err;
  EXPECT_NE(o.out.find("verified"), std::string::npos);
  EXPECT_EQ(run({"interpolate", "--logic", "P1", "p", "q"}).status, 1);
  auto t = run({"table", "--logic", "K3", "&"});
  EXPECT_EQ(t.status, 0);
  EXPECT_NE(t.out.find("1 | 1 u 0"), std::string::npos) << t.out;
  auto s = run({"synthesize", "--logic", "K3", "neg", "ant1"});
  EXPECT_EQ(s.status, 0);
  EXPECT_NE(s.out.find(": suc2:A"), std::string::npos) << s.out;
  auto l = run({"list-logics"});
  EXPECT_EQ(l.status, 0);
  EXPECT_NE(l.out.find("Palasinska1"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  for (const auto& [logic, g, c] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"K3", "p, p->q", "q"}, {"K3", "", "p | ~p"}, {"J3", "dia p", "p"}}) {
    auto o = run({"prove", "--json", "--logic", logic, g, c});
    auto j = json::parse(o.out);
    std::string prem;
    for (const auto& x : j["premisses"]) prem += (prem.empty() ? "" : ", ") + x.get<std::string>();
    auto again = run({"prove", "--json", "--logic", j["logic"], prem, j["conclusion"]});
    auto k = json::parse(again.out);
    EXPECT_EQ(k["verdict"], j["verdict"]);
    EXPECT_EQ(k["root"], j["root"]);
    EXPECT_EQ(again.status, o.status);
    EXPECT_EQ(j["verdict"] == "proved", o.status == 0);
  }
}

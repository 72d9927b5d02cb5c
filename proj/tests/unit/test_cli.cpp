#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpi_cli/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lpi::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const Result r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

const json& verdict(const json& doc, const std::string& name) {
  for (const auto& v : doc["verdicts"])
    if (v["name"] == name) return v;
  static const json none;
  ADD_FAILURE() << "no verdict " << name;
  return none;
}

}  // namespace

TEST(Cli, ParseEchoesCanonicalForm) {
  const Result r = run({"parse", "--poly", "x1^4 - 1 + 0*x2", "--ring", "q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-1 + x1^4"), std::string::npos);
}

TEST(Cli, SyntaxErrorPointsAtInput) {
  const Result r = run({"parse", "--poly", "1 - y2"});
  EXPECT_EQ(r.code, lpi::cli::kUsage);
  EXPECT_NE(r.err.find("position 4"), std::string::npos);
  EXPECT_NE(r.err.find("      ^"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"standard", "--n", "2", "--algebra", "matrix:1:gf3", "--exhaustive", "--trials", "5"}).code,
            lpi::cli::kUsage);
  EXPECT_EQ(run({"check-lpi", "--algebra", "matrix:2:gf4", "--poly", "1 - x1"}).code, lpi::cli::kUsage);
  EXPECT_EQ(run({"check-lpi", "--algebra", "cube:2:q", "--poly", "1 - x1"}).code, lpi::cli::kUsage);
  EXPECT_EQ(run({"check-lpi", "--algebra", "matrix:2:q", "--poly", "x1 - x1"}).code, lpi::cli::kUsage);
  EXPECT_EQ(run({"no-such-command"}).code, lpi::cli::kUsage);
  EXPECT_EQ(run({"derive"}).code, lpi::cli::kUsage);
}

TEST(Cli, EngineErrors) {
  const Result big = run({"check-lpi", "--algebra", "matrix:2:gf3", "--poly", "1 - x1*x2*x3", "--exhaustive", "--budget", "100"});
  EXPECT_EQ(big.code, lpi::cli::kEngine);
  EXPECT_NE(big.err.find("TooLarge"), std::string::npos);
  const Result na = run({"derive", "--poly", "1 - x1*x2*x1^-1*x2^-1"});
  EXPECT_EQ(na.code, lpi::cli::kEngine);
  EXPECT_NE(na.err.find("x1*x2*x1^-1*x2^-1"), std::string::npos);
  EXPECT_EQ(run({"derive", "--poly", "x1 - x1^2"}).code, lpi::cli::kEngine);
  EXPECT_EQ(run({"check-pi", "--algebra", "matrix:2:q", "--poly", "x1^-1"}).code, lpi::cli::kEngine);
}

TEST(Cli, DeriveJson) {
  const json doc = run_json({"derive", "--poly", "1 - x1^4", "--ring", "q"});
  const json& c = doc["construction"];
  EXPECT_EQ(c["l"], 4);
  EXPECT_EQ(c["r"], 4);
  EXPECT_EQ(c["deg_f2"], 9);
  EXPECT_EQ(c["d"], 19);
  EXPECT_EQ(c["deg_f_bound"], 19);
  EXPECT_EQ(c["f2_linear_coefficient"], "0");
  EXPECT_TRUE(c["k"].is_null());
  for (const auto& term : c["f"]) EXPECT_EQ(term["exponent"].get<int>() % 2, 1);
  for (const char* key : {"command", "inputs", "seed", "verdicts", "construction", "witnesses", "stats"})
    EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_FALSE(doc["stats"].contains("elapsed_ms"));
}

TEST(Cli, DeriveReportsK) {
  const json doc = run_json({"derive", "--poly", "1 - x1^2*x2^-2"});
  EXPECT_EQ(doc["construction"]["k"], 3);
  EXPECT_EQ(doc["construction"]["normalized"], "1 - x1^6*x2^-2");
}

TEST(Cli, VerifyLayers) {
  const Result r = run({"verify-theorem1", "--algebra", "tri:2:gf3", "--poly", "1 - x1^6", "--exhaustive"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("premise: Holds"), std::string::npos);
  EXPECT_NE(r.out.find("f2 layer: Holds"), std::string::npos);
  EXPECT_NE(r.out.find("f layer: Holds"), std::string::npos);
  EXPECT_NE(r.out.find("seed: 0"), std::string::npos);

  const json doc = run_json({"verify-theorem1", "--algebra", "matrix:2:gf3", "--poly", "1 - x1^4", "--trials", "300"},
                            lpi::cli::kFails);
  EXPECT_EQ(verdict(doc, "premise")["status"], "Fails");
  EXPECT_TRUE(doc["report"]["vacuous"].get<bool>());
  EXPECT_FALSE(doc["witnesses"].empty());
}

TEST(Cli, CheckLpiWitnessIsPrinted) {
  const Result r = run({"check-lpi", "--algebra", "matrix:2:gf5", "--poly", "1 - x1*x2*x1^-1*x2^-1", "--trials", "1000"});
  EXPECT_EQ(r.code, lpi::cli::kFails);
  EXPECT_NE(r.out.find("Fails"), std::string::npos);
  EXPECT_NE(r.out.find("x1 = "), std::string::npos);
  EXPECT_NE(r.out.find("seed: 0"), std::string::npos);
}

TEST(Cli, CheckPiAndIdeal) {
  EXPECT_EQ(run({"check-pi", "--algebra", "matrix:1:gf3", "--poly", "x1*x2 - x2*x1", "--exhaustive"}).code, 0);
  const json doc = run_json({"check-pi", "--algebra", "matrix:2:gf2", "--poly", "x1*x2 - x2*x1", "--exhaustive"},
                            lpi::cli::kFails);
  const json& w = verdict(doc, "pi")["witness"];
  EXPECT_EQ(w[0]["value"], "[[1,0],[0,0]]");
  EXPECT_EQ(w[1]["value"], "[[0,1],[0,0]]");
  EXPECT_EQ(run({"check-pi", "--algebra", "tri:2:gf2", "--poly", "x1^2", "--ideal", "[[0,1],[0,0]]", "--exhaustive"}).code, 0);
}

TEST(Cli, StandardAndGroupIdentity) {
  EXPECT_EQ(run({"standard", "--n", "2", "--algebra", "matrix:1:gf3", "--exhaustive"}).code, 0);
  EXPECT_EQ(run({"standard", "--n", "4", "--algebra", "matrix:3:gf2", "--trials", "10000"}).code, lpi::cli::kFails);
  EXPECT_EQ(run({"standard", "--n", "9", "--algebra", "matrix:3:gf2"}).code, lpi::cli::kEngine);
  EXPECT_EQ(run({"check-gi", "--algebra", "tri:2:gf2", "--word", "x1^2", "--exhaustive"}).code, 0);
  EXPECT_EQ(run({"check-gi", "--algebra", "matrix:2:gf5", "--word", "x1*x2*x1^-1*x2^-1"}).code, lpi::cli::kFails);
}

TEST(Cli, Nilpotency) {
  const json doc = run_json({"nilpotency", "--algebra", "tri:3:q", "--poly", "1 - x1^4", "--samples", "5"});
  EXPECT_TRUE(doc["report"].is_object());
  const Result small = run({"nilpotency", "--algebra", "tri:3:gf2", "--poly", "1 - x1^4", "--exhaustive"});
  EXPECT_EQ(small.code, 0) << small.err;
  EXPECT_NE(small.out.find("skipped"), std::string::npos);
}

TEST(Cli, Hartley) {
  const json doc = run_json({"hartley", "--group", "c6", "--field", "q", "--trials", "200"});
  EXPECT_EQ(doc["report"]["classification"], "Abelian");
  const Result s3 = run({"hartley", "--group", "s3", "--field", "gf5", "--trials", "300"});
  EXPECT_EQ(s3.code, 0) << s3.out;
  EXPECT_NE(s3.out.find("NonDedekind"), std::string::npos);
}

TEST(Cli, Counterexample) {
  const Result r = run({"counterexample", "--n", "2", "--field", "gf5", "--trials", "2000", "--seed", "7", "--max-power", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("admissible: no"), std::string::npos);
  EXPECT_NE(r.out.find("HoldsProbably"), std::string::npos);
  EXPECT_NE(r.out.find("nilpotent no"), std::string::npos);
  EXPECT_NE(r.out.find("seed: 7"), std::string::npos);
}

TEST(Cli, JsonIsByteIdenticalAcrossRunsAndJobs) {
  const std::vector<std::string> base{"check-lpi", "--algebra", "matrix:3:q", "--poly", "1 - x1^6", "--trials", "200", "--seed", "11", "--json"};
  const Result a = run(base);
  const Result b = run(base);
  EXPECT_EQ(a.out, b.out);
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  json ja = json::parse(a.out), jc = json::parse(run(with_jobs).out);
  ja["inputs"]["mode"].erase("jobs");
  jc["inputs"]["mode"].erase("jobs");
  EXPECT_EQ(ja.dump(), jc.dump());
}

TEST(Cli, TextAndJsonAgree) {
  const std::vector<std::string> args{"standard", "--n", "4", "--algebra", "matrix:3:gf2", "--trials", "2000", "--seed", "3"};
  const Result text = run(args);
  auto jargs = args;
  jargs.push_back("--json");
  const json doc = json::parse(run(jargs).out);
  const std::string status = verdict(doc, "standard")["status"];
  EXPECT_NE(text.out.find(status), std::string::npos);
  EXPECT_EQ(doc["exit_code"], text.code);
}

TEST(Cli, TimingIsOptIn) {
  const json doc = run_json({"derive", "--poly", "1 - x1^4", "--timing"});
  EXPECT_TRUE(doc["stats"].contains("elapsed_ms"));
}

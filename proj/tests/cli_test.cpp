#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fideal/complex.hpp"
#include "fideal/decomposition.hpp"
#include "json_io.hpp"
#include "test_support.hpp"

namespace fideal::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fideal");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FIDEAL_GOLDEN_DIR) + "/" + name);
  std::ostringstream b;
  b << in.rdbuf();
  return b.str();
}

const std::string kDegree3 = testing::fixture_path("degree3_example.ideal");
const std::string kNonexample = testing::fixture_path("nonexample_5var.ideal");

TEST(Cli, CheckDegree3Golden) {
  const Result r = invoke({"check", kDegree3});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, golden("check_degree3.txt"));
  EXPECT_NE(r.out.find("f-ideal: true"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CheckNonexampleGolden) {
  const Result r = invoke({"check", kNonexample});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, golden("check_nonexample.txt"));
  EXPECT_EQ(invoke({"check", "--expect-f-ideal", kNonexample}).code, kExitNotFIdeal);
  EXPECT_EQ(invoke({"check", "--expect-f-ideal", kDegree3}).code, kExitOk);
}

TEST(Cli, DecomposeNonexample) {
  const Result r = invoke({"decompose", "--ideal", "n=5; 124 125 345 145 235"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "(x1,x3) ∩ (x1,x5) ∩ (x2,x4) ∩ (x2,x5) ∩ (x4,x5)");
  EXPECT_EQ(r.out, golden("decompose_nonexample.txt"));
}

TEST(Cli, FvectorAndHilbertGolden) {
  EXPECT_EQ(invoke({"fvector", kDegree3}).out, golden("fvector_degree3.txt"));
  EXPECT_EQ(invoke({"hilbert", kDegree3}).out, golden("hilbert_degree3.txt"));
  EXPECT_EQ(invoke({"fvector", kNonexample}).out, golden("fvector_nonexample.txt"));
}

TEST(Cli, CensusParityPruned) {
  const Result r = invoke({"census", "--n", "6", "--d", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("parity-pruned"), std::string::npos);
  EXPECT_NE(r.out.find("f-ideals (direct): 0"), std::string::npos);
  const Result j = invoke({"census", "--n", "6", "--d", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["f_ideals"], 0);
  EXPECT_EQ(doc["scanned"], 0);
  EXPECT_TRUE(doc["parity_pruned"].get<bool>());
}

TEST(Cli, CensusDisagreementExitsThree) {
  const Result r = invoke({"census", "--n", "5", "--d", "3"});
  EXPECT_EQ(r.code, kExitTheoremViolation);
  EXPECT_NE(r.err.find("THEOREM-VIOLATION"), std::string::npos);
  EXPECT_EQ(invoke({"census", "--n", "4", "--d", "2"}).code, kExitOk);
}

TEST(Cli, CheckCounterexampleExitsThree) {
  const Result r = invoke({"check", testing::fixture_path("counterexample_5var.ideal")});
  EXPECT_EQ(r.code, kExitTheoremViolation);
  EXPECT_NE(r.out.find("f-ideal: true"), std::string::npos);
  EXPECT_NE(r.err.find("THEOREM-VIOLATION"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(invoke({"check", "--ideal", "n=3; 14"}).code, kExitInputError);
  EXPECT_EQ(invoke({"check", "/nonexistent/file.ideal"}).code, kExitInputError);
  EXPECT_EQ(invoke({"check"}).code, kExitInputError);
  EXPECT_EQ(invoke({}).code, kExitInputError);
  EXPECT_EQ(invoke({"check", "--format", "xml", kDegree3}).code, kExitInputError);
  EXPECT_EQ(invoke({"census", "--n", "9", "--d", "2"}).code, kExitInputError);
  EXPECT_EQ(invoke({"suite", "--pairs", "4;2"}).code, kExitInputError);
  // Duplicates: strict for check, lenient elsewhere.
  EXPECT_EQ(invoke({"check", "--ideal", "n=3; 12 12 23"}).code, kExitInputError);
  const Result lenient = invoke({"fvector", "--ideal", "n=3; 12 12 23"});
  EXPECT_EQ(lenient.code, kExitOk);
  EXPECT_NE(lenient.err.find("warning"), std::string::npos);
  EXPECT_EQ(invoke({"fvector", "--strict", "--ideal", "n=3; 12 12 23"}).code, kExitInputError);
}

TEST(Cli, CheckJsonMatchesTextAndSchema) {
  const Result r = invoke({"check", "--format", "json", kDegree3});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["s"], 10);
  EXPECT_TRUE(j["pure"].get<bool>());
  EXPECT_EQ(j["conditions"]["height"]["observed"], 3);
  EXPECT_EQ(j["conditions"]["height"]["expected"], 3);
  EXPECT_EQ(j["conditions"]["parity_count"]["binom"], 20);
  EXPECT_EQ(j["conditions"]["parity_count"]["ass"], 10);
  EXPECT_EQ(j["conditions"]["skeleton"]["observed"], 15);
  EXPECT_EQ(fvector_from_json(j["f_facet"]), (FVector{{6, 15, 10}}));
  EXPECT_EQ(fvector_from_json(j["f_nonface"]), (FVector{{6, 15, 10}}));
  EXPECT_TRUE(j["f_ideal"].get<bool>());
}

TEST(Cli, DecomposeJsonRoundTrip) {
  for (const std::string& path : {kDegree3, kNonexample}) {
    const Result r = invoke({"decompose", "--format", "json", path});
    const Decomposition parsed = decomposition_from_json(nlohmann::json::parse(r.out));
    const Decomposition direct = primary_decomposition(testing::load_fixture(
        path.substr(path.rfind('/') + 1)));
    EXPECT_EQ(parsed.components, direct.components);
    EXPECT_EQ(parsed.height, direct.height);
    EXPECT_EQ(to_json(parsed), nlohmann::json::parse(r.out));
  }
}

TEST(Cli, HilbertJson) {
  const Result r = invoke({"hilbert", "--format", "json", "--terms", "4", kDegree3});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"], (std::vector<int>{1, 6, 21, 46}));
  EXPECT_EQ(j["denominator_power"], 6);
}

TEST(Cli, SuiteDegreeTwo) {
  const Result r = invoke({"suite", "--pairs", "4,2", "5,2", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["disagreements"], 0);
  EXPECT_EQ(j["pairs"].size(), 2u);
}

TEST(Cli, Help) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("census"), std::string::npos);
}

}  // namespace
}  // namespace fideal::cli

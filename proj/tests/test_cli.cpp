#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;

  [[nodiscard]] json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nm::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, InvariantsJson) {
  const auto r = run({"--format", "json", "invariants", "--gens", "10,13,15"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = r.doc();
  EXPECT_EQ(d["schema_version"], "nm/1");
  EXPECT_EQ(d["command"], "invariants");
  EXPECT_EQ(d["results"]["rho"], 2);
  EXPECT_EQ(d["results"]["frobenius"], 57);
  EXPECT_EQ(d["results"]["mult"], 10);
}

TEST(Cli, InvariantsWitnessAndTrivial) {
  EXPECT_EQ(run({"--format", "json", "invariants", "--gens", "11,12,14,15,20"}).doc()["results"]["type"], 6);
  const auto d = run({"--format", "json", "invariants", "--gens", "2,3"}).doc();
  EXPECT_EQ(d["results"]["rho"], 1);
  EXPECT_EQ(d["results"]["type"], 1);
}

TEST(Cli, HumanOutput) {
  const auto r = run({"invariants", "--gens", "10,13,15"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rho"), std::string::npos);
  EXPECT_NE(r.out.find("57"), std::string::npos);
}

TEST(Cli, Bounds) {
  const auto d = run({"--format", "json", "bounds", "--e", "3", "--m", "10"}).doc();
  EXPECT_EQ(d["results"]["cem"], 10);
  EXPECT_EQ(d["results"]["non_sharp_k"], 2);
  const auto d2 = run({"--format", "json", "bounds", "--e", "4", "--m", "11"}).doc();
  EXPECT_EQ(d2["results"]["cem"], 14);
  EXPECT_EQ(d2["results"]["dem"], 7);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"invariants", "--gens", "4,6"}).code, 2);
  EXPECT_EQ(run({"invariants"}).code, 2);
  EXPECT_EQ(run({"bounds", "--e", "5", "--m", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "no-such-target"}).code, 2);
  EXPECT_EQ(run({"search", "--e", "4", "--m", "4"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "bounds", "--e", "3", "--m", "10"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"family", "--e", "3", "--m", "10"}).code, 2);  // below 2^t
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, VerifyTargets) {
  const auto r = run({"--format", "json", "verify", "mixed-beta2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["results"]["failed"], 0);
  const auto s = run({"--format", "json", "verify", "small-gap", "--e", "3..10"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.doc()["results"]["cells"], 48);
  EXPECT_EQ(run({"verify", "type-deficit"}).code, 0);
  // Short ids select the same suite.
  auto a = run({"--format", "json", "verify", "thm-3.3", "--e", "3..4"}).doc();
  auto b = run({"--format", "json", "verify", "small-gap", "--e", "3..4"}).doc();
  EXPECT_EQ(a["results"], b["results"]);
}

TEST(Cli, Search) {
  const auto d = run({"--format", "json", "search", "--e", "3", "--m", "4", "--kunz-bound", "2"}).doc();
  EXPECT_EQ(d["results"]["best_rho"], 6);
  const auto b = run({"--format", "json", "search", "--e", "3", "--m", "10", "--kunz-bound", "4"}).doc();
  EXPECT_LE(b["results"]["best_rho"].get<int>(), 9);
  EXPECT_TRUE(b["results"]["exhausted"].get<bool>());
}

TEST(Cli, SearchCsvRange) {
  const auto r = run({"--format", "csv", "search", "--e", "2", "--m", "4..6", "--kunz-bound", "2"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("e,m,cem,dem,best_rho,best_type", 0), 0u) << header;
  int lines = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++lines;
  EXPECT_EQ(lines, 3);
}

TEST(Cli, SearchCheckpointResume) {
  const auto path = (std::filesystem::temp_directory_path() / "nm_cli_ckpt.jsonl").string();
  std::remove(path.c_str());
  const std::vector<std::string> args{"--format", "json", "search", "--e", "3", "--m", "8", "--kunz-bound", "3",
                                      "--checkpoint", path};
  const auto first = run(args).doc();
  const auto second = run(args).doc();
  EXPECT_EQ(first["results"], second["results"]);
  std::remove(path.c_str());
}

TEST(Cli, FamilyAndBetti) {
  const auto f = run({"--format", "json", "family", "--e", "9", "--m", "16"}).doc();
  EXPECT_EQ(f["results"]["rho"], f["results"]["cem"]);
  EXPECT_TRUE(f["results"]["sharp"].get<bool>());
  const auto g = run({"--format", "json", "family", "--e", "4", "--m", "8"}).doc();
  EXPECT_EQ(g["results"]["family"], "small-delta");
  for (const std::string engine : {"ek", "recursion", "koszul"}) {
    const auto b = run({"--format", "json", "betti", "--e", "3", "--m", "16", "--engine", engine});
    ASSERT_EQ(b.code, 0) << engine << b.err;
    EXPECT_EQ(b.doc()["results"]["totals"], json({11, 17, 7})) << engine;
  }
}

TEST(Cli, DeterministicApartFromTimings) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "invariants", "--gens", "11,12,14,15,20"},
           {"--format", "json", "search", "--e", "4", "--m", "9", "--kunz-bound", "3", "--jobs", "3"},
           {"--format", "json", "verify", "lex-strict-drop"}}) {
    auto a = run(args).doc(), b = run(args).doc();
    a.erase("timings");
    b.erase("timings");
    EXPECT_EQ(a.dump(), b.dump());
  }
}

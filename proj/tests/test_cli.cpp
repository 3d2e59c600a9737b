#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

/// Runs the CLI with the given arguments; stderr is discarded.
CliRun cli(const std::string& args) {
  const std::string command = std::string("\"") + FLOWCOUNT_CLI + "\" " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return run;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string fixture(const std::string& name) { return std::string("\"") + FLOWCOUNT_FIXTURES + "/" + name + "\""; }

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

/// The "result" string of a JSON report, for string-valued results.
std::string json_result(const std::string& out) {
  const std::string key = "\"result\":\"";
  const auto start = out.find(key);
  if (start == std::string::npos) return "<missing>";
  const auto end = out.find('"', start + key.size());
  return out.substr(start + key.size(), end - start - key.size());
}

TEST(Cli, KostantExamples) {
  EXPECT_EQ(trimmed(cli("kostant --excess 6,8,-5,-9").out), "223");
  EXPECT_EQ(trimmed(cli("transport --rows 220,215,93,64 --cols 108,286,71,127").out), "1225914276768514");
  const CliRun zero = cli("kostant --excess 0,0,0");
  EXPECT_EQ(zero.code, 0);
  EXPECT_EQ(trimmed(zero.out), "1");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("kostant --excess 6,8,-5,-9").code, 0);
  EXPECT_EQ(cli("--no-such-flag count " + fixture("k4.json")).code, 64);
  EXPECT_EQ(cli("frobnicate").code, 64);
  EXPECT_EQ(cli("").code, 64);
  EXPECT_EQ(cli("kostant --excess 6,8,-5").code, 2);
  EXPECT_EQ(cli("count " + fixture("nonzero_sum.json")).code, 2);
  EXPECT_EQ(cli("count " + fixture("malformed.json")).code, 2);
  EXPECT_EQ(cli("count " + fixture("cyclic_uncapacitated.json")).code, 2);
  EXPECT_EQ(cli("count /nonexistent/file.json").code, 2);
}

TEST(Cli, ReportSp) {
  const CliRun r = cli("--report-sp kostant --excess 1,2,3,4,5,-15");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trimmed(r.out), "5880\nsp_size 1");
}

TEST(Cli, JsonAndPlainAgree) {
  const std::vector<std::string> commands = {
      "count " + fixture("k4.json"),          "volume " + fixture("pitman_stanley3.json"),
      "polynomial " + fixture("pitman_stanley3.json"), "ehrhart " + fixture("k4.json"),
      "kostant --excess 9,11,-12,-8",         "oracle " + fixture("cap_cycle_square.json"),
      "--parallel 3 count " + fixture("two_components.json"),
  };
  for (const auto& c : commands) {
    const CliRun plain = cli(c);
    const CliRun json = cli("--json " + c);
    EXPECT_EQ(plain.code, 0) << c;
    EXPECT_EQ(json.code, 0) << c;
    EXPECT_EQ(json_result(json.out), trimmed(plain.out)) << c;
    EXPECT_NE(json.out.find("\"seconds\":"), std::string::npos);
    EXPECT_NE(json.out.find("\"sp_size\":"), std::string::npos);
  }
}

TEST(Cli, JsonCarriesSpSize) {
  const CliRun r = cli("--json kostant --excess 1,2,3,4,5,-15");
  EXPECT_NE(r.out.find("\"sp_size\":1"), std::string::npos) << r.out;
  const CliRun o = cli("--json oracle " + fixture("k4.json"));
  EXPECT_NE(o.out.find("\"sp_size\":null"), std::string::npos) << o.out;
}

TEST(Cli, CountMatchesOracleOnFixtures) {
  for (const char* name : {"g1.json", "k4.json", "pitman_stanley3.json", "cap_cycle_triangle.json",
                           "cap_cycle_square.json", "cap_acyclic_mixed.json", "two_components.json"}) {
    const CliRun count = cli(std::string("count ") + fixture(name));
    const CliRun oracle = cli(std::string("oracle ") + fixture(name));
    EXPECT_EQ(count.code, 0) << name;
    EXPECT_EQ(trimmed(count.out), trimmed(oracle.out)) << name;
  }
}

TEST(Cli, StructuredOutputs) {
  const CliRun reduce = cli("reduce " + fixture("g1.json"));
  EXPECT_EQ(reduce.code, 0);
  EXPECT_NE(reduce.out.find("\"arc_map\""), std::string::npos);
  const CliRun chambers = cli("chambers " + fixture("k4.json"));
  EXPECT_EQ(chambers.code, 0);
  EXPECT_NE(chambers.out.find("\"chambers\""), std::string::npos);
  const CliRun listing = cli("oracle --enumerate --limit 1 " + fixture("k4.json"));
  EXPECT_EQ(listing.code, 0);
  EXPECT_NE(listing.out.find("\"truncated\":true"), std::string::npos);
}

}  // namespace

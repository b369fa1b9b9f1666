#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "common.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(CARNOT_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, DecideEngelTwo) {
  CliRun r = run("decide " + corpus_path("engel2"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "NOT_SEMIGENERATED; certificate: Engel quotient (ideal = 0, n = 2)\n");
}

TEST(Cli, StarWitness) {
  CliRun r = run("star " + corpus_path("n626"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "NO; witness: radical chain forces a1 = 0, then span dim 2 < 3\n");
}

TEST(Cli, ValidateForgedTable) {
  CliRun r = run("validate " + corpus_path("bad-jacobi"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("JacobiViolation(e1,e2,e3)"), std::string::npos);
}

TEST(Cli, SaturateEngelOne) {
  CliRun r = run("saturate " + corpus_path("engel1") + " --lambda 0,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "E ⊇ {X, T, Z}; V3 ⊆ E ⇒ half-space semigenerating\n");
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("decide").code, 1);
  EXPECT_EQ(run("decide " + corpus_path("engel1") + " --bogus").code, 1);
  EXPECT_EQ(run("decide " + corpus_path("engel1") + " --lambda 1/0,1").code, 1);
  EXPECT_EQ(run("decide /nonexistent.json").code, 1);
}

TEST(Cli, FreeRoundTripsThroughValidate) {
  std::string path = ::testing::TempDir() + "/free24.json";
  CliRun f = run("free --rank 2 --step 4 > " + path);
  EXPECT_EQ(f.code, 0);
  CliRun v = run("validate " + path);
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "OK: free24 (dim 8, layers (2, 1, 2, 3), stratified)\n");
  std::remove(path.c_str());
}

TEST(Cli, VerifyAcceptsDecideOutput) {
  std::string path = ::testing::TempDir() + "/d.json";
  ASSERT_EQ(run("decide " + corpus_path("137A") + " --json > " + path).code, 0);
  CliRun v = run("verify " + corpus_path("137A") + " --cert " + path);
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "VALID; SEMIGENERATED (diamond)\n");
  std::remove(path.c_str());
}

TEST(Cli, ExitCodeTwoOnUnknown) {
  // Saturation stalls at dim E = 6 and no Engel quotient sees this half-space.
  CliRun r = run("decide " + corpus_path("free33") + " --lambda 1,1,1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("UNKNOWN"), std::string::npos);
}

TEST(Cli, SimulateIsDeterministicAcrossThreads) {
  std::string base = "simulate " + corpus_path("engel1") + " --lambda 1,0 --count 50 --seed 3";
  CliRun a = run(base);
  CliRun b = run(base + " --threads 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RecognizeAndAbnormal) {
  CliRun r = run("recognize " + corpus_path("137A"));
  EXPECT_EQ(r.out.rfind("NOT ENGEL; failure at step 1", 0), 0u);
  CliRun a = run("abnormal " + corpus_path("engel2") + " --nu 1,1,0");
  EXPECT_EQ(a.out.rfind("NON-ABNORMAL", 0), 0u);
}

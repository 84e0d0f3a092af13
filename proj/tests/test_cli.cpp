#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int exit_code(const std::string& args) {
  const std::string cmd = std::string(COEX_SIM_EXE) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("coexsim_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, InitThenValidate) {
  const auto cfg = (dir_ / "scenario.json").string();
  EXPECT_EQ(exit_code("init --out " + cfg), 0);
  EXPECT_TRUE(fs::exists(cfg));
  EXPECT_EQ(exit_code("validate --config " + cfg), 0);
}

TEST_F(Cli, ValidationErrorsExitWithOne) {
  EXPECT_EQ(exit_code("validate --config " + write("bad.json", R"({"duty": {"on_fraction": 2}})")), 1);
  EXPECT_EQ(exit_code("validate --config " + write("junk.json", "{ not json")), 1);
  EXPECT_EQ(exit_code("validate --config " + (dir_ / "missing.json").string()), 1);
  EXPECT_EQ(exit_code("run --config " + write("k.json", R"({"nope": 1})") + " --out " + (dir_ / "o").string()), 1);
  EXPECT_EQ(exit_code("sweep --config " + write("ok.json", "{}") + " --duty 0.6 --seeds 5..1 --out x"), 1);
}

TEST_F(Cli, RuntimeErrorsExitWithTwo) {
  // Output path is a regular file, so the directory cannot be created.
  const auto cfg = write("short.json", R"({"horizon_s": 0.05})");
  const auto blocker = write("blocker", "x");
  EXPECT_EQ(exit_code("run --config " + cfg + " --out " + blocker + "/sub"), 2);
}

TEST_F(Cli, RunWritesAllArtifactsDeterministically) {
  const auto cfg = write("short.json", R"({"horizon_s": 0.3})");
  ASSERT_EQ(exit_code("run --config " + cfg + " --seed 42 --out " + (dir_ / "a").string()), 0);
  ASSERT_EQ(exit_code("run --config " + cfg + " --seed 42 --out " + (dir_ / "b").string()), 0);
  for (const char* f : {"summary.json", "nodes.csv", "sinr_hist.csv", "deployment.json"}) {
    ASSERT_TRUE(fs::exists(dir_ / "a" / f)) << f;
    EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
  }
}

TEST_F(Cli, SweepWritesTable) {
  const auto cfg = write("short.json", R"({"horizon_s": 0.2})");
  ASSERT_EQ(exit_code("sweep --config " + cfg + " --duty 0.6,0.8 --seeds 1..3 --out " + (dir_ / "s").string()), 0);
  const std::string csv = slurp(dir_ / "s" / "sweep.csv");
  int lines = 0;
  for (char c : csv) lines += c == '\n' ? 1 : 0;
  EXPECT_EQ(lines, 1 + 6 + 2);
  EXPECT_TRUE(fs::exists(dir_ / "s" / "duty_0.8" / "seed_3" / "summary.json"));
}

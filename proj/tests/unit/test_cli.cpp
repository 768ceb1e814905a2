#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef VENN_CLI_PATH

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("venn_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  // Runs the tool; stdout lands in `out`.
  static int run(const std::string& args, std::string* out = nullptr) {
    const std::string capture = path("stdout.txt");
    const std::string cmd = std::string(VENN_CLI_PATH) + " " + args + " > " + capture + " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    if (out) {
      std::ifstream in(capture);
      std::stringstream ss;
      ss << in.rdbuf();
      *out = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static fs::path dir_;
};

fs::path Cli::dir_;

}  // namespace

TEST_F(Cli, ConstructAndCheck) {
  ASSERT_EQ(run("construct edwards --n 4 --resolution 256 -o " + path("e4.grid")), 0);
  ASSERT_EQ(run("construct circles --n 3 -o " + path("c3.map")), 0);
  std::string out;
  EXPECT_EQ(run("check " + path("e4.grid") + " --which thm3", &out), 0);
  EXPECT_NE(out.find("\"edges\":28"), std::string::npos) << out;
  EXPECT_NE(out.find("\"bound\":32"), std::string::npos);
  EXPECT_EQ(run("check " + path("e4.grid") + " --which fully", &out), 1);
  EXPECT_NE(out.find("\"subset\":[3,4]"), std::string::npos) << out;
  EXPECT_EQ(run("check " + path("c3.map") + " --which thm2 --r 2"), 0);
  EXPECT_EQ(run("check " + path("c3.map") + " --which lemma3"), 0);
  EXPECT_EQ(run("check " + path("e4.grid") + " --which cor1"), 0);
  EXPECT_EQ(run("check " + path("c3.map") + " --which cor1"), 2);  // fully reducible
  EXPECT_EQ(run("analyze " + path("e4.grid"), &out), 0);
  EXPECT_NE(out.find("\"schema\":\"venn-report\""), std::string::npos);
}

TEST_F(Cli, ConstructedEdwardsHasExpectedRegions) {
  ASSERT_EQ(run("construct edwards --n 5 --resolution 256 -o " + path("e5.grid")), 0);
  std::string out;
  EXPECT_EQ(run("check " + path("e5.grid") + " --which venn", &out), 0);
  EXPECT_NE(out.find("\"regions\":32"), std::string::npos) << out;
}

TEST_F(Cli, LiftTwiceGivesFourDimensionalVenn) {
  ASSERT_EQ(run("construct edwards --n 4 --resolution 64 -o " + path("e4s.grid")), 0);
  ASSERT_EQ(run("construct lift --in " + path("e4s.grid") + " --times 2 -o " + path("e4l.grid")), 0);
  std::string out;
  EXPECT_EQ(run("check " + path("e4l.grid") + " --which fully", &out), 0);
  EXPECT_NE(out.find("\"m\":4"), std::string::npos) << out;
  EXPECT_EQ(run("construct lift --in " + path("e4s.grid") + " --order index -o " + path("bad.grid")), 1);
  EXPECT_EQ(run("render " + path("e4l.grid") + " --slice 3=5 --slice 4=5 -o " + path("slice.svg")), 0);
  EXPECT_EQ(run("render " + path("e4l.grid") + " -o " + path("x.svg")), 2);
  EXPECT_EQ(run("render " + path("e4l.grid") + " --slice 9=1"), 2);
}

TEST_F(Cli, Conjecture) {
  std::string out;
  EXPECT_EQ(run("conjecture bound --m 3 --n 5", &out), 0);
  EXPECT_EQ(out, "76\n");
  EXPECT_EQ(run("conjecture recurrence --m 3 --n 5", &out), 0);
  EXPECT_EQ(out, "76\n");
  EXPECT_EQ(run("conjecture detid --m-max 12", &out), 0);
  EXPECT_NE(out.find("all equal"), std::string::npos);
  EXPECT_EQ(run("conjecture coefficients --m 3", &out), 0);
  EXPECT_NE(out.find("a0=0 a1=-4"), std::string::npos);
}

TEST_F(Cli, RenderMap) {
  ASSERT_EQ(run("construct circles --n 3 -o " + path("c3.map")), 0);
  std::string a, b;
  EXPECT_EQ(run("render " + path("c3.map") + " --labels", &a), 0);
  EXPECT_EQ(run("render " + path("c3.map") + " --labels", &b), 0);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("<svg"), std::string::npos);
}

TEST_F(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run("check " + path("missing.grid")), 2);
  {
    std::ofstream(path("junk.grid")) << "{\"format\":\"venn-grid\",\"version\":7}";
  }
  EXPECT_EQ(run("check " + path("junk.grid")), 2);
  {
    std::ofstream(path("broken.grid")) << "not json";
  }
  EXPECT_EQ(run("check " + path("broken.grid")), 2);
  EXPECT_EQ(run("nonsense"), 2);
  EXPECT_EQ(run("construct circles --n 7"), 2);
  ASSERT_EQ(run("construct circles --n 3 -o " + path("c3.map")), 0);
  EXPECT_EQ(run("check " + path("c3.map") + " --which thm2 --r 3"), 2);
  EXPECT_EQ(run("check " + path("c3.map") + " --which bogus"), 2);
}

TEST_F(Cli, CellBudget) {
  ASSERT_EQ(run("construct edwards --n 3 --resolution 64 -o " + path("e3.grid")), 0);
  EXPECT_EQ(run("construct edwards --n 3 --resolution 64 -o " + path("e3.grid")), 0);
  const std::string limited = "VENN_MAX_CELLS=1000 ";
  const std::string cmd = limited + VENN_CLI_PATH + " check " + path("e3.grid") + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

#endif  // VENN_CLI_PATH

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(LARGENESS_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(LARGENESS_DATA) + "/" + name; }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("abelian '<a,b | [a,b]>'").code, 0);
  EXPECT_EQ(run("abelian '<a,b | [a,b]'").code, 1);
  EXPECT_EQ(run("abelian /nonexistent/file.pres").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("analyze '<a,t | t a t^-1 a^-2>' --max-index 0").code, 1);
  EXPECT_EQ(run("construct bs 0 2").code, 1);
  EXPECT_EQ(run("construct mapping-torus 'x^2' y").code, 1);
  EXPECT_EQ(run("lowindex " + data("g0.pres") + " --max-index 14 --max-cosets 50").code, 2);
}

TEST(Cli, AnalyzeThenVerify) {
  const CliResult a = run("analyze " + data("height1_t_minus_2.pres") + " --json");
  ASSERT_EQ(a.code, 0);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("status"), "LargeCertified");
  EXPECT_EQ(j.at("certificate").at("kind"), "HeightOneBigAbelianization");
  const std::string path = ::testing::TempDir() + "verdict.json";
  std::ofstream(path) << a.out;
  const CliResult v = run("verify " + data("height1_t_minus_2.pres") + " " + path + " --json");
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(nlohmann::json::parse(v.out).at("valid"), true);
  EXPECT_EQ(run("verify " + data("bs_2_3.pres") + " " + path).code, 1);
}

TEST(Cli, Construct) {
  EXPECT_EQ(run("construct bs 2 3").out, "< a, t | t a^2 t^-1 a^-3 >\n");
  EXPECT_EQ(run("construct cmn 1 2").out, "< a, t | t a t^-1 a t a^-1 t^-1 a^-2 >\n");
  EXPECT_EQ(run("construct mapping-torus y z 'x y'").out,
            "< t, x, y, z | t x t^-1 y^-1, t y t^-1 z^-1, t z t^-1 y^-1 x^-1 >\n");
  const CliResult d = run("construct double --basis a,b,c --copy x,y,z b c 'a b'");
  EXPECT_EQ(d.out,
            "< t, a, b, c, x, y, z | t a t^-1 b^-1, t b t^-1 c^-1, t c t^-1 b^-1 a^-1, t x t^-1 y^-1, t y t^-1 z^-1, "
            "t z t^-1 y^-1 x^-1 >\n");
  const CliResult h = run("construct hnn-iterate '<a,t | t a t^-1 a^-2>' 1");
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(run("alex '" + h.out.substr(0, h.out.size() - 1) + "'").out, "alexander polynomial: 1\n");
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run("alex " + data("bs_2_3.pres")).out, "alexander polynomial: 2t - 3\n");
  EXPECT_EQ(run("alex " + data("bs_2_4.pres") + " --prime 2").out, "alexander polynomial: 2t - 4\nmod 2: 0\n");
  EXPECT_EQ(run("alex " + data("f2_times_z.pres")).code, 1);
  EXPECT_EQ(run("alex " + data("f2_times_z.pres") + " --chi 1,0,0").out, "alexander polynomial: 0\n");
  EXPECT_EQ(run("abelian " + data("g0.pres")).out, "Z^1\n");
  const CliResult h = run("height " + data("height1_t_minus_2.pres") + " --json");
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(nlohmann::json::parse(h.out).at("forms")[0].at("alexander_polynomial"), "t - 2");
  const CliResult l = run("lowindex '<a,t | t a t^-1 a^-2>' --max-index 3 --json");
  ASSERT_EQ(l.code, 0);
  EXPECT_EQ(nlohmann::json::parse(l.out).at("subgroups").size(), 4u);
}

TEST(Cli, Deterministic) {
  for (const std::string& args : std::vector<std::string>{"census --k 1 --bound 4 --samples 25 --seed 3 --json",
                                 "analyze " + data("torus.pres") + " --json",
                                 "analyze " + data("bs_2_4.pres") + " --json --seed 9"}) {
    const CliResult a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  EXPECT_EQ(nlohmann::json::parse(run("analyze " + data("bs_2_4.pres") + " --json --seed 9").out).at("seed"), 9);
}

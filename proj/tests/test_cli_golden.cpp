#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
  std::string cmd = std::string(GENKUMMER_CLI_PATH) + " " + args + " --out " +
                    out_path;
  return std::system(cmd.c_str());
}

int exit_code(int status) {
#ifdef WEXITSTATUS
  return WEXITSTATUS(status);
#else
  return status;
#endif
}

}  // namespace

TEST_CASE("json output is deterministic and matches the golden files") {
  struct Entry {
    std::string report, extra, golden;
  };
  for (const Entry& e :
       {Entry{"gxi-orbits", "", "gxi-orbits"},
        Entry{"bb-kprime", "", "bb-kprime"},
        Entry{"symplectic-tables", "--q 2", "symplectic-tables-q2"}}) {
    std::string p1 = "/tmp/genkummer_" + e.golden + "_1.json";
    std::string p2 = "/tmp/genkummer_" + e.golden + "_2.json";
    std::string args = "--report " + e.report + " --format json " + e.extra;
    REQUIRE(exit_code(run_cli(args, p1)) == 0);
    REQUIRE(exit_code(run_cli(args, p2)) == 0);
    std::string a = slurp(p1), b = slurp(p2);
    CHECK(a == b);
    CHECK(!a.empty());
    std::string golden =
        slurp(std::string(GENKUMMER_GOLDEN_DIR) + "/" + e.golden + ".json");
    CHECK(a == golden);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
  }
}

TEST_CASE("text format emits one line per check") {
  std::string path = "/tmp/genkummer_text.txt";
  REQUIRE(exit_code(run_cli("--report bb-kprime --format text", path)) == 0);
  std::string out = slurp(path);
  CHECK(out.find("[PASS] bb-kprime/fujiki-constant") != std::string::npos);
  CHECK(out.find("\"8\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(exit_code(std::system((std::string(GENKUMMER_CLI_PATH) +
                               " --report no-such-report > /dev/null 2>&1")
                                  .c_str())) == 2);
  CHECK(exit_code(std::system((std::string(GENKUMMER_CLI_PATH) +
                               " --q 7 > /dev/null 2>&1")
                                  .c_str())) == 2);
  CHECK(exit_code(std::system((std::string(GENKUMMER_CLI_PATH) +
                               " --report torus-ring > /dev/null 2>&1")
                                  .c_str())) == 0);
}

TEST_CASE("seed flag is accepted and stable") {
  std::string p1 = "/tmp/genkummer_seed1.json";
  std::string p2 = "/tmp/genkummer_seed2.json";
  REQUIRE(exit_code(run_cli(
              "--report torus-ring --format json --seed 7", p1)) == 0);
  REQUIRE(exit_code(run_cli(
              "--report torus-ring --format json --seed 7", p2)) == 0);
  CHECK(slurp(p1) == slurp(p2));
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

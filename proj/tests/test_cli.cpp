#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SPECTRA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "spectra_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("prob prints exact fractions") {
  auto r = run("prob --catalog symmetric:3 --kind group");
  CHECK(r.code == 0);
  CHECK(r.out == "1/2\n");
  r = run("prob --catalog cyclic:7 --kind group");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run("prob --catalog ut3:3 --kind ring");
  CHECK(r.out == "11/27\n");
  r = run("prob --catalog symmetric:4 --method classes");
  CHECK(r.out == "5/24\n");
}

TEST_CASE("construct then prob pipeline") {
  const auto path = scratch("rg.json");
  auto r = run("construct --op commring --catalog heisenberg:3 --output " + path.string());
  REQUIRE(r.code == 0);
  r = run("prob --input " + path.string() + " --poly 1,0");
  CHECK(r.code == 0);
  CHECK(r.out == "11/27\n");

  const auto again = scratch("rg2.json");
  r = run("construct --op product --input " + path.string() + " --catalog2 zn:2 --output " + again.string());
  REQUIRE(r.code == 0);
  r = run("prob --input " + again.string() + " --poly 1,0");
  CHECK(r.out == "11/36\n");
}

TEST_CASE("save and load reproduce canonical JSON") {
  const auto a = scratch("a.json");
  const auto b = scratch("b.json");
  REQUIRE(run("construct --op circle --catalog ut3:3 --output " + a.string()).code == 0);
  REQUIRE(run("construct --op product --input " + a.string() + " --catalog2 cyclic:1 --output " + b.string()).code ==
          0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind(R"({"identity":0,"n":27,"table":[[)", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("prob --catalog nothing:3").code == 2);
  CHECK(run("prob --catalog symmetric:3 --kind ring").code == 2);
  CHECK(run("prob --catalog ut3:2 --poly 1").code == 2);
  CHECK(run("prob --input /does/not/exist.json").code == 2);
  CHECK(run("construct --op commring --catalog symmetric:3").code == 2);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"type":"group","n":2,"identity":0,"table":[[0,1],[1,1]]})";
  CHECK(run("analyze --input " + bad.string()).code == 2);

  const auto v = run("verify --suite lemma11 --seed 3");
  CHECK(v.code == 0);
  CHECK(v.out.find("instances=") != std::string::npos);
  CHECK(v.out.find("max_order=") != std::string::npos);
  CHECK(v.out.find("PASS") != std::string::npos);
}

TEST_CASE("verify is deterministic given the seed") {
  auto strip = [](std::string s) {
    const auto at = s.find("\"wall_seconds\"");
    return s.substr(0, at);
  };
  const auto a = run("verify --suite multiplicativity --seed 9 --json");
  const auto b = run("verify --suite multiplicativity --seed 9 --json");
  CHECK(a.code == 0);
  CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("analyze and enumerate reports") {
  auto r = run("analyze --catalog q8");
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("center_size":2)") != std::string::npos);
  CHECK(r.out.find(R"("class":2)") != std::string::npos);
  r = run("enumerate --bilinear --V 2,2 --W 2 --poly 1,0");
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("p_over_q":"5/8")") != std::string::npos);
  r = run("enumerate --general --invariants 2,2 --associative");
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("pass":true)") != std::string::npos);
  CHECK(run("enumerate --general --bilinear --invariants 2").code == 2);
  CHECK(run("enumerate --general --invariants 2,2,2,2,2,2,2").code == 2);
  CHECK(run("catalog").out.find("cyclic:n") != std::string::npos);
}

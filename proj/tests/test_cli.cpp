#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BINMAT_BIN
#define BINMAT_BIN "binmat"
#endif
#ifndef BINMAT_DATA_DIR
#define BINMAT_DATA_DIR "data"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("binmat_out_" + std::to_string(++counter));
  fs::path err = fs::temp_directory_path() / ("binmat_err_" + std::to_string(counter));
  std::string cmd = std::string(BINMAT_BIN) + " " + args + " >" + out.string() + " 2>" +
                    err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

}  // namespace

TEST_CASE("cli: info on a catalog name") {
  RunResult r = run("info E5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("rank: 5") != std::string::npos);
  CHECK(r.out.find("elements: 10") != std::string::npos);
  CHECK(r.out.find("3-connected: yes") != std::string::npos);
  CHECK(r.out.find("self-dual: yes") != std::string::npos);
}

TEST_CASE("cli: info on a file") {
  namespace fs = std::filesystem;
  fs::path f = fs::temp_directory_path() / "binmat_cli_m.bm";
  std::ofstream(f) << "2 4\n11\n01\n";
  RunResult r = run("info " + f.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("rank: 2") != std::string::npos);
  fs::remove(f);
}

TEST_CASE("cli: iso verdicts and exit codes") {
  CHECK(run("iso E5 E5").exit_code == 0);
  RunResult neg = run("iso E4 E5");
  CHECK(neg.exit_code == 1);
  CHECK(neg.out.find("not isomorphic") != std::string::npos);
}

TEST_CASE("cli: minor verdicts") {
  CHECK(run("minor H E4").exit_code == 0);
  CHECK(run("minor A E4").exit_code == 1);
  CHECK(run("minor R17 R10").exit_code == 0);
}

TEST_CASE("cli: ext classes with flags") {
  RunResult r = run("ext E5 --flag E4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("A\t00101 00110 01011 01100\tE4-minor=no") != std::string::npos);
  CHECK(r.out.find("H\t10101 10110 11000 11111\tE4-minor=yes") != std::string::npos);

  RunResult filtered = run("ext E5 --exclude E4");
  int lines = 0;
  for (char c : filtered.out)
    if (c == '\n') ++lines;
  CHECK(lines == 3);  // A, B, C
}

TEST_CASE("cli: splitter verdicts") {
  CHECK(run("splitter M12 --require E5 --exclude E4").exit_code == 0);
  RunResult neg = run("splitter E5 --require E5 --exclude E4");
  CHECK(neg.exit_code == 1);
  CHECK(neg.out.find("not a splitter") != std::string::npos);
  CHECK(run("splitter R10 --exclude F7 --exclude F7*").exit_code == 0);
}

TEST_CASE("cli: chain output") {
  RunResult r = run("chain M12 E5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("0 | start | - | 5 | 10 | -") != std::string::npos);
  CHECK(r.out.find("valid") != std::string::npos);
  CHECK(run("chain E5 E5").exit_code == 1);  // not a proper minor
}

TEST_CASE("cli: tables match the golden files byte for byte") {
  for (const char* t : {"a1", "a2"}) {
    RunResult r = run(std::string("tables ") + t);
    REQUIRE(r.exit_code == 0);
    std::string golden = slurp(std::filesystem::path(BINMAT_DATA_DIR) / "golden" /
                               ("table_" + std::string(t) + ".txt"));
    REQUIRE(r.out == golden);
  }
}

TEST_CASE("cli: almost-regular") {
  CHECK(run("almost-regular E5").exit_code == 0);
  CHECK(run("almost-regular R10").exit_code == 1);
}

TEST_CASE("cli: usage and data errors") {
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("info").exit_code == 2);
  CHECK(run("info NoSuchMatroid").exit_code == 3);
  CHECK(run("tables a9").exit_code == 3);
  namespace fs = std::filesystem;
  fs::path bad = fs::temp_directory_path() / "binmat_bad.bm";
  std::ofstream(bad) << "5 10\n01111\n";
  CHECK(run("info " + bad.string()).exit_code == 3);
  fs::remove(bad);
}

TEST_CASE("cli: output is byte-identical across worker counts") {
  RunResult one = run("ext E5 --flag E4 --jobs 1");
  RunResult two = run("ext E5 --flag E4 --jobs 2");
  RunResult four = run("ext E5 --flag E4 --jobs 4");
  REQUIRE(one.exit_code == 0);
  CHECK(one.out == two.out);
  CHECK(one.out == four.out);

  RunResult c1 = run("chain M12 E5 --jobs 1");
  RunResult c4 = run("chain M12 E5 --jobs 4");
  CHECK(c1.out == c4.out);
}

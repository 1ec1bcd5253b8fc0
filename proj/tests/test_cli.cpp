#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

  fs::path const kDir = fs::temp_directory_path() / "holonomy_cli_test";

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path write(std::string const& name, std::string const& text) {
    fs::create_directories(kDir);
    fs::path const p = kDir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  struct Run {
    int         status;
    std::string out;
    std::string err;
  };

  Run run(std::string const& args) {
    fs::create_directories(kDir);
    fs::path const    out = kDir / "stdout";
    fs::path const    err = kDir / "stderr";
    std::string const cmd = std::string(HOLONOMY_CLI) + " " + args + " >" + out.string() + " 2>"
                            + err.string();
    int const raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  std::string const kExample1 = "n=3; [2,1,3]; [1,2,2]\n";
  std::string const kExample2 =
      R"({"n":6,"generators":[[1,2,3,1,1,1],[4,4,4,5,4,6],[4,4,4,5,6,4],)"
      R"([4,4,4,4,5,5],[4,4,4,1,2,3],[2,3,1,4,4,4]]})";

}  // namespace

TEST_CASE("skeleton report and DOT file") {
  fs::path const in  = write("ex1.txt", kExample1);
  fs::path const dot = kDir / "ex1.dot";
  Run const      r   = run("skeleton --dot " + dot.string() + " " + in.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("extended image set: 5") != std::string::npos);
  CHECK(r.out.find("classes: 4") != std::string::npos);
  CHECK(slurp(dot).find("digraph skeleton") != std::string::npos);

  Run const ex2 = run("skeleton " + write("ex2.json", kExample2).string());
  CHECK(ex2.out.find("semigroup size: 138") != std::string::npos);
  CHECK(ex2.out.find("extended image set: 19") != std::string::npos);
}

TEST_CASE("stdin input") {
  Run const r = run("holonomy - < " + write("ex1.txt", kExample1).string());
  CHECK(r.status == 0);
  CHECK(r.out.find("order 2") != std::string::npos);
}

TEST_CASE("chains tables") {
  fs::path const in = write("ex1.txt", kExample1);
  Run const      r  = run("chains --chain '{1,2,3},{1,2},{1}' --lift 's2 s1' " + in.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("{1}     | {2}   | {2}") != std::string::npos);
  CHECK(run("chains " + in.string()).out == "{{1,2,3}, {1,2}, {1}}\n{{1,2,3}, {1,2}, {2}}\n{{1,2,3}, {3}}\n");
  CHECK(run("chains --chain '{1,2,3},{1}' " + in.string()).status == 2);
  CHECK(run("chains --chain '{1,2,3},{1,2},{1}' --lift 's9' " + in.string()).status == 2);
}

TEST_CASE("verify exit codes") {
  fs::path const in = write("ex1.txt", kExample1);
  Run const      ok = run("verify --words 200 " + in.string());
  CHECK(ok.status == 0);
  CHECK(ok.out.find("\"passed\": true") != std::string::npos);
  CHECK(run("verify --words 0 " + in.string()).status == 0);
  Run const bad = run("verify --words 200 --inject-fault " + in.string());
  CHECK(bad.status == 1);
  CHECK(bad.out.find("\"passed\": false") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  Run const r = run("skeleton " + write("bad.txt", "n=3\n[2,1,4]\n").string());
  CHECK(r.status == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run("skeleton " + (kDir / "missing.txt").string()).status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("budget overruns exit with 3") {
  Run const r = run("skeleton --budget 3 " + write("ex2.json", kExample2).string());
  CHECK(r.status == 3);
  CHECK(r.err.find("exceeded the budget of 3 elements") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  fs::path const in = write("ex2.json", kExample2);
  for (std::string const cmd : {"skeleton", "skeleton --json", "holonomy", "holonomy --json",
                                "cascade", "cascade --json", "verify --words 300 --seed 5"}) {
    CAPTURE(cmd);
    CHECK(run(cmd + " " + in.string()).out == run(cmd + " " + in.string()).out);
  }
  fs::path const a = kDir / "a.dot";
  fs::path const b = kDir / "b.dot";
  (void)run("skeleton --dot " + a.string() + " " + in.string());
  (void)run("skeleton --dot " + b.string() + " " + in.string());
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}

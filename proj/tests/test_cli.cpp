// Drives the installed binary through every subcommand and checks the
// documented exit-status contract: 0 affirmative, 1 negative, 2 unknown,
// 64 usage, 65 parse error, 70 internal.
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("LEVELALG_CLI");
  return env ? env : "./levelalg";
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

} // namespace

TEST_CASE("expand / oseq / si / gor") {
  auto e = run("expand --n 10 --i 3");
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("C(5,3)") != std::string::npos);
  CHECK(e.out.find("15") != std::string::npos);

  CHECK(run("oseq --h 1,3,6,10,9,7,5,2").exit_code == 0);
  CHECK(run("oseq --h 1,2,4").exit_code == 1);
  CHECK(run("si --h 1,3,4,4,3,1").exit_code == 0);
  CHECK(run("si --h 1,3,2,3,1").exit_code == 1);
  CHECK(run("gor --h 1,3,4,5,5,4,3,1").exit_code == 0);
  CHECK(run("gor --h 1,3,2,3,1").exit_code == 1);
  CHECK(run("gor --h 1,5,5,1").exit_code == 2);
}

TEST_CASE("module subcommands") {
  write_file("cli_mod.forms", "y1*y3^3\ny2*y3^3\n");
  auto hv = run("hvector --module cli_mod.forms");
  CHECK(hv.exit_code == 0);
  CHECK(hv.out.find("[1,3,3,3,2]") != std::string::npos);

  auto ann = run("ann --module cli_mod.forms --d 2 --format plain-table");
  CHECK(ann.exit_code == 0);
  CHECK(ann.out.find("dimension: 3") != std::string::npos);

  auto soc = run("socle --module cli_mod.forms");
  CHECK(soc.exit_code == 0);
  CHECK(soc.out.find("[0,0,0,0,2]") != std::string::npos);

  auto d3 = run("decompose3 --module cli_mod.forms");
  CHECK(d3.exit_code == 0);
  CHECK(d3.out.find("[1,1,1,1,0]") != std::string::npos);

  auto pen = run("pencil --module cli_mod.forms");
  CHECK(pen.exit_code == 0);
  CHECK(pen.out.find("\"certified_max\":2") != std::string::npos);
}

TEST_CASE("level2 verdict exit codes and witness artifact round trip") {
  auto not_level = run("level2 --h 1,3,6,10,9,7,5,2");
  CHECK(not_level.exit_code == 1);
  CHECK(not_level.out.find("thm23-screen") != std::string::npos);
  CHECK(not_level.out.find("1,3,2,0,1,1,1,0") != std::string::npos);

  auto level = run("level2 --h 1,3,3,3,2");
  CHECK(level.exit_code == 0);
  CHECK(level.out.find("witness_file") != std::string::npos);
  auto pos = level.out.find("level2-witness-");
  REQUIRE(pos != std::string::npos);
  std::string path = level.out.substr(pos, level.out.find('"', pos) - pos);
  auto re_h = run("hvector --module " + path);
  CHECK(re_h.exit_code == 0);
  CHECK(re_h.out.find("[1,3,3,3,2]") != std::string::npos);
  auto re_s = run("socle --module " + path);
  CHECK(re_s.out.find("[0,0,0,0,2]") != std::string::npos);

  auto unknown = run("level2 --h 1,8,7,2");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("determinism: identical invocations produce identical bytes") {
  auto a = run("level2 --h 1,3,4,4,3,2 --seed 5");
  auto b = run("level2 --h 1,3,4,4,3,2 --seed 5");
  CHECK(a.out == b.out);
  auto c = run("witness --r 3 --a 4 --e 5 --seed 9");
  auto d = run("witness --r 3 --a 4 --e 5 --seed 9");
  CHECK(c.out == d.out);
}

TEST_CASE("enumerate, bounds, maxh, witness") {
  auto en = run("enumerate --r 3 --e 4");
  CHECK(en.exit_code == 0);
  CHECK(en.out.find("[1,3,3,2]") != std::string::npos);
  CHECK(en.out.find("[1,3,4,3,2]") != std::string::npos);

  auto bo = run("bounds --r 3 --a 5 --e 7 --i 2");
  CHECK(bo.exit_code == 0);
  CHECK(bo.out.find("\"entry_upper\":\"9\"") != std::string::npos);

  auto mx = run("maxh --r 5 --a 5 --e 8");
  CHECK(mx.exit_code == 0);
  CHECK(mx.out.find("[1,5,11,21,36,21,11,5,2]") != std::string::npos);

  auto wi = run("witness --r 3 --a 4 --e 7");
  CHECK(wi.exit_code == 0);
  CHECK(wi.out.find("[1,3,6,10,11,7,4,2]") != std::string::npos);
}

TEST_CASE("betti, diesel, mfr-f1, gotzmann") {
  write_file("cli_ideal.forms", "x1^2\nx1*x2\nx2^2\nx3^4\n");
  auto be = run("betti --ideal cli_ideal.forms --cap 8");
  CHECK(be.exit_code == 0);
  CHECK(be.out.find("\"beta1\":[2,2,2,4]") != std::string::npos);

  write_file("cli_mod2.forms", "y1*y3^3\ny2*y3^3\n");
  auto bm = run("betti --module cli_mod2.forms");
  CHECK(bm.exit_code == 0);
  CHECK(bm.out.find("[0,0,0,0,2]") != std::string::npos);

  auto di = run("diesel --h 1,3,3,3,1 --q 2,2,2,4,4");
  CHECK(di.exit_code == 0);
  auto di_bad = run("diesel --h 1,3,3,3,1 --q 2,2,2");
  CHECK(di_bad.exit_code == 1);

  auto mf = run("mfr-f1 --h 1,3,4,4,3,2");
  CHECK(mf.exit_code == 0);
  CHECK(mf.out.find("[2,2,3,4,6]") != std::string::npos);
  CHECK(run("mfr-f1 --h 1,3,5,4,3,2").exit_code == 1);

  CHECK(run("gotzmann --r 3 --d 2 --n 6 --m 10").exit_code == 0);
  CHECK(run("gotzmann --r 3 --d 2 --n 3 --m 9").exit_code == 1);
}

TEST_CASE("usage and parse errors") {
  CHECK(run("level2 --h 1,3,3,1").exit_code == 64);          // h_e != 2
  CHECK(run("level2 --h 1,3,x,2").exit_code == 65);          // malformed list
  CHECK(run("level2 --h 2,3,3,2").exit_code == 65);          // h_0 != 1
  CHECK(run("nonsense --h 1,2").exit_code == 64);            // unknown subcommand
  CHECK(run("maxh --r 3").exit_code == 64);                  // missing flags
  CHECK(run("hvector --module no_such_file.forms").exit_code == 65);
  write_file("cli_bad.forms", "y1 + y2^2\n");
  CHECK(run("hvector --module cli_bad.forms").exit_code == 65);
  CHECK(run("maxh --r 3 --a 4 --e 7 --format csv").exit_code == 64);
  CHECK(run("bounds --r 1").exit_code == 64);
}

TEST_CASE("plain-table format") {
  auto mx = run("maxh --r 3 --a 3 --e 7 --format plain-table");
  CHECK(mx.exit_code == 0);
  CHECK(mx.out.find("hvector: [1,3,4,5,5,4,3,2]") != std::string::npos);
}

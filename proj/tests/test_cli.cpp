#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef PATHBIJ_CLI_BIN
#error "PATHBIJ_CLI_BIN must point at the CLI executable"
#endif

namespace {

struct CliResult {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  std::string command = std::string("\"") + PATHBIJ_CLI_BIN + "\" " + args;
  if (stdin_data.empty()) {
    command += " < /dev/null 2>&1";
  } else {
    const std::string stdin_file = "pathbij_cli_stdin.txt";
    std::ofstream out(stdin_file, std::ios::trunc);
    out << stdin_data;
    out.close();
    command += " < " + stdin_file + " 2>&1";
  }

  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli enumerate lists paths in lexicographic order") {
  const CliResult r = run_cli("enumerate --family dyck --n 3");
  CHECK(r.status == 0);
  CHECK(r.output == "UUUDDD\nUUDUDD\nUUDDUD\nUDUUDD\nUDUDUD\n");

  const CliResult empty = run_cli("enumerate --family motzkin --n 0");
  CHECK(empty.status == 0);
  CHECK(empty.output == "\n");
}

TEST_CASE("cli enumerate honors the cap") {
  const CliResult r = run_cli("enumerate --family dyck --n 3 --cap 2");
  CHECK(r.status == 1);
  CHECK(r.output.find("SizeTooLarge") != std::string::npos);
}

TEST_CASE("cli stats prints the record as name<TAB>value") {
  const CliResult r = run_cli("stats --path UUDUDUUDDD");
  CHECK(r.status == 0);
  CHECK(r.output ==
        "udu_count\t2\n"
        "ddu_count\t0\n"
        "uuu_count\t0\n"
        "green_flat_count\t0\n"
        "black_flat_count\t0\n"
        "down_count\t5\n"
        "descent_count\t3\n"
        "short_nonterminal_descent_count\t2\n"
        "ground_flat_count\t0\n");
}

TEST_CASE("cli stats validates against the requested family") {
  CHECK(run_cli("stats --path F --family motzkin").status == 0);
  const CliResult r = run_cli("stats --path F --family dyck");
  CHECK(r.status == 1);
  CHECK(r.output.find("FamilyViolation") != std::string::npos);
}

TEST_CASE("cli stats diagnostics use 1-based positions") {
  const CliResult r = run_cli("stats --path UUXDD");
  CHECK(r.status == 1);
  CHECK(r.output.find("position 3") != std::string::npos);
  CHECK(r.output.find("1-based") != std::string::npos);
}

TEST_CASE("cli map applies the documented examples") {
  const CliResult t1 = run_cli("map --bij t1 --dir forward --path UUDUDUUDDD");
  CHECK(t1.status == 0);
  CHECK(t1.output == "UFUDD\n");

  const CliResult t2 =
      run_cli("map --bij t2 --dir forward --path UUDFUFDGDUDFUD");
  CHECK(t2.status == 0);
  CHECK(t2.output == "UUUDDUUUUDDDUDUDDDUUDDUUUDDUDD\n");

  const CliResult back = run_cli(
      "map --bij t2 --dir inverse --path UUUDDUUUUDDDUDUDDDUUDDUUUDDUDD");
  CHECK(back.status == 0);
  CHECK(back.output == "UUDFUFDGDUDFUD\n");
}

TEST_CASE("cli map reads stdin batches and keeps input order") {
  const CliResult forward =
      run_cli("map --bij t2 --dir forward", "F\nUD\n");
  CHECK(forward.status == 0);
  CHECK(forward.output == "UUDD\nUUDDUD\n");

  const CliResult round =
      run_cli("map --bij t2 --dir inverse", forward.output);
  CHECK(round.status == 0);
  CHECK(round.output == "F\nUD\n");
}

TEST_CASE("cli map rejects domain errors with exit status 1") {
  const CliResult r = run_cli("map --bij t1 --dir forward --path UUUDDD");
  CHECK(r.status == 1);
  CHECK(r.output.find("NotUUUFree") != std::string::npos);

  const CliResult bad_line = run_cli("map --bij t1 --dir forward", "UD\nUUU\n");
  CHECK(bad_line.status == 1);
  CHECK(bad_line.output.find("line 2") != std::string::npos);
}

TEST_CASE("cli usage errors exit with status 2") {
  CHECK(run_cli("map --bij bogus --dir forward --path UD").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("enumerate --family dyck").status == 2);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("cli table prints the TSV distribution") {
  const CliResult r = run_cli("table --stat udu --n 4");
  CHECK(r.status == 0);
  CHECK(r.output ==
        "n\tk\tbrute\tformula\tok\n"
        "4\t0\t4\t4\t1\n"
        "4\t1\t6\t6\t1\n"
        "4\t2\t3\t3\t1\n"
        "4\t3\t1\t1\t1\n");
}

TEST_CASE("cli seq prints comma-separated prefixes") {
  const CliResult r = run_cli("seq --name motzkin --count 7");
  CHECK(r.status == 0);
  CHECK(r.output == "1,1,2,4,9,21,51\n");

  const CliResult riordan = run_cli("seq --name riordan --count 6");
  CHECK(riordan.status == 0);
  CHECK(riordan.output == "1,0,1,1,3,6\n");
}

TEST_CASE("cli verify runs the invariant suite deterministically") {
  const CliResult r = run_cli("verify --max-n 4");
  CHECK(r.status == 0);
  CHECK(r.output.find("PASS parse-render-round-trip\n") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);

  const CliResult again = run_cli("verify --max-n 4");
  CHECK(again.output == r.output);
}

TEST_CASE("cli map forward-then-inverse reproduces enumerate output "
          "byte-for-byte") {
  const CliResult source = run_cli("enumerate --family bicolored --n 3");
  CHECK(source.status == 0);
  const CliResult forward = run_cli("map --bij t2 --dir forward", source.output);
  CHECK(forward.status == 0);
  const CliResult inverse = run_cli("map --bij t2 --dir inverse", forward.output);
  CHECK(inverse.status == 0);
  CHECK(inverse.output == source.output);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_support.hpp"

#include <string>

using ctk_test::golden_path;
using ctk_test::read_file;
using ctk_test::run_cli;
using ctk_test::write_file;

TEST_CASE("classify prints the class and Q") {
  CHECK(run_cli("classify 0/1,0/1 1/1,0/1").out == "TimelikeFuture Q=1\n");
  CHECK(run_cli("classify 0,0 1,1").out == "LightlikeFuture Q=0\n");
  CHECK(run_cli("classify 0,0 0,1").out == "SpacelikePlus Q=-1\n");
  CHECK(run_cli("classify 0,0 1,1").exit_code == 0);
}

TEST_CASE("relate answers by name and by index") {
  CHECK(run_cli("relate chronology 0,0 1,0").out == "true\n");
  CHECK(run_cli("relate 1 0,0 0,1").out == "false\n");
  CHECK(run_cli("relate horismos 2,3 2,3").out == "true\n");
  CHECK(run_cli("relate compl-chronology 0,0 1,1").out == "true\n");
  CHECK(run_cli("relate compl-chronology 0,0 1,0").out == "false\n");
}

TEST_CASE("catalog matches its golden byte for byte") {
  const auto first = run_cli("catalog");
  const auto second = run_cli("catalog");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == read_file(golden_path("catalog.txt")));

  const auto json = run_cli("catalog --json");
  CHECK(json.out == read_file(golden_path("catalog.json")));
}

TEST_CASE("lct-audit matches its golden") {
  const auto run = run_cli("lct-audit");
  CHECK(run.exit_code == 0);
  CHECK(run.out == read_file(golden_path("lct_audit.txt")));
  CHECK(run.out == run_cli("lct-audit").out);
}

TEST_CASE("render is deterministic and matches its golden") {
  const std::string args =
      "render 26 --window -1,-1:1,1 --res 3x3 --format pgm";
  const auto first = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == run_cli(args).out);
  CHECK(first.out == read_file(golden_path("render_tid26_3x3.pgm")));

  const auto csv = run_cli("render 26 --window -1,-1:1,1 --res 3x3 --format csv");
  CHECK(csv.out == "0,1,0\n0,1,0\n0,1,0\n");
}

TEST_CASE("converge honors the exit-code contract") {
  std::string seq_path = "cli_null_seq.csv";
  std::string rows;
  for (int k = 1; k <= 100; ++k) {
    rows += "1/" + std::to_string(k) + ",1/" + std::to_string(k) + "\n";
  }
  write_file(seq_path, rows);

  const auto ok = run_cli("converge 3 --limit 0,0 --seq " + seq_path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("converged") != std::string::npos);

  const auto refuted = run_cli("converge 27 --limit 0,0 --seq " + seq_path);
  CHECK(refuted.exit_code == 3);
  CHECK(refuted.out.find("refuted") != std::string::npos);

  const auto euclidean = run_cli("converge E --limit 0,0 --seq " + seq_path);
  CHECK(euclidean.exit_code == 0);

  write_file("cli_empty.csv", "");
  CHECK(run_cli("converge 3 --limit 0,0 --seq cli_empty.csv").exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("classify zzz 1,0").exit_code == 2);
  CHECK(run_cli("relate nosuch 0,0 1,0").exit_code == 2);
  CHECK(run_cli("converge 42 --limit 0,0 --seq cli_null_seq.csv").exit_code == 2);
  CHECK(run_cli("render 26 --window -1,-1:1,1 --res 3x3 --format bmp").exit_code ==
        2);
  CHECK(run_cli("neighborhood 30 0,0").exit_code == 0);  // region itself is fine
  CHECK(run_cli("catalog --json --text").exit_code == 2);
}

TEST_CASE("dual and member answer plainly") {
  CHECK(run_cli("dual 1").out == "dual of 1 (T_<<) is 7 (T_<)\n");
  CHECK(run_cli("dual 27 --json").out == "{\"tid\":27,\"dual\":18}\n");
  CHECK(run_cli("member 26 1/2,0").out == "true\n");
  CHECK(run_cli("member 26 0,1/2").out == "false\n");
}

TEST_CASE("region JSON flows from neighborhood into member and render") {
  const auto region = run_cli("neighborhood 27 0,0 --eps 1");
  CHECK(region.exit_code == 0);
  write_file("cli_region.json", region.out);
  CHECK(run_cli("member cli_region.json 1/2,0").out == "true\n");
  CHECK(run_cli("member cli_region.json 0,1/2").out == "false\n");
  const auto render =
      run_cli("render cli_region.json --window -1,-1:1,1 --res 3x3 --format csv");
  CHECK(render.exit_code == 0);
  CHECK(render.out == "0,0,0\n0,1,0\n0,0,0\n");

  write_file("cli_bad.json", "{\"type\":\"wedge\"}");
  CHECK(run_cli("member cli_bad.json 0,0").exit_code == 2);
}

TEST_CASE("automorphism-check exit codes track the verdict") {
  CHECK(run_cli("automorphism-check boost:2 all").exit_code == 0);
  CHECK(run_cli("automorphism-check reflect-t chronology").exit_code == 3);
  CHECK(run_cli("automorphism-check reflect-t chorology").exit_code == 0);
  const auto rays = run_cli(
      "automorphism-check linear:3/5,-4/5,4/5,3/5 chronology --light-rays");
  CHECK(rays.exit_code == 3);
  CHECK(rays.out.find("-48/25") != std::string::npos);
  CHECK(run_cli("automorphism-check boost:0 all").exit_code == 2);
}

TEST_CASE("CTK_OUTPUT env var sets the default format") {
  const auto json = run_cli("catalog --json");
  FILE* pipe = popen((std::string("CTK_OUTPUT=json ") + CTK_CLI_PATH +
                      " catalog 2>/dev/null")
                         .c_str(),
                     "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  CHECK(out == json.out);
}

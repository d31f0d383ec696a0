// End-to-end checks of the command-line binary: every path is a thin
// wrapper, so outputs must match the library on the same inputs.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "mlst/harness.hpp"
#include "mlst/heuristics.hpp"
#include "mlst/instances.hpp"

using namespace mlst;

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  static int counter = 0;
  const std::filesystem::path capture = dir / ("mlst_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string command = std::string(MLST_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  result.output.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return result;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("generate writes instance plus metadata and prints the counts") {
  auto out = temp_path("cli_g3.mlst");
  CliResult res = run_cli("generate g3 --b 2 -o " + out.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("n = 5") != std::string::npos);
  CHECK(res.output.find("k = 3") != std::string::npos);
  CHECK(res.output.find("m = 6") != std::string::npos);
  CHECK(res.output.find("opt = 2") != std::string::npos);
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(out.string() + ".meta"));
  LabeledGraph g = load_instance(out);
  CHECK(g.n() == 5);

  CliResult g1 = run_cli("generate g1 --k 5 -o " + temp_path("cli_g1.mlst").string());
  CHECK(g1.exit_code == 0);
  CHECK(g1.output.find("m = 10") != std::string::npos);
}

TEST_CASE("generate maps domain errors to exit 1") {
  CliResult res = run_cli("generate g-prime --a 3 --k 12 -o " + temp_path("cli_gp.mlst").string());
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("ParamOutOfRange") != std::string::npos);
}

TEST_CASE("unknown flags exit 2") {
  CliResult res = run_cli("generate g1 --k 5 --frobnicate -o " + temp_path("x.mlst").string());
  CHECK(res.exit_code == 2);
  CliResult empty = run_cli("");
  CHECK(empty.exit_code == 2);
}

TEST_CASE("solve mvca matches the library and needs no seed") {
  auto g3 = temp_path("cli_g3b.mlst");
  run_cli("generate g3 --b 2 -o " + g3.string());
  CliResult res = run_cli("solve mvca " + g3.string() + " --tie lowest");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("cardinality = 3") != std::string::npos);
  LabelSubset expected = modified_mvca(gen_g3(2).graph, {TieBreakKind::lowest_index});
  CHECK(res.output.find("solution = " + expected.to_string()) != std::string::npos);
}

TEST_CASE("solve ea is seed-pinned and refuses to run unseeded") {
  auto g1 = temp_path("cli_g1b.mlst");
  run_cli("generate g1 --k 5 -o " + g1.string());
  CliResult res = run_cli("solve ea " + g1.string() + " --budget 10000 --seed 0");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("cardinality = 2") != std::string::npos);
  CliResult repeat = run_cli("solve ea " + g1.string() + " --budget 10000 --seed 0");
  CHECK(repeat.output == res.output);
  CliResult unseeded = run_cli("solve ea " + g1.string() + " --budget 10000");
  CHECK(unseeded.exit_code == 2);

  auto record = temp_path("cli_record.txt");
  run_cli("solve ea " + g1.string() + " --budget 10000 --seed 0 --record " + record.string());
  std::ifstream in(record);
  std::string dump((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(dump.find("seed = 0") != std::string::npos);
  CHECK(dump.find("event = 0") != std::string::npos);
}

TEST_CASE("solve ls2 from the recorded local optimum stays trapped") {
  auto g2 = temp_path("cli_g2.mlst");
  run_cli("generate g2 --k 10 -o " + g2.string());
  CliResult res = run_cli("solve ls2 " + g2.string() + " --init local");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("cardinality = 8") != std::string::npos);
}

TEST_CASE("solve era from the star tree returns k-1 labels") {
  auto g1 = temp_path("cli_g1c.mlst");
  run_cli("generate g1 --k 5 -o " + g1.string());
  CliResult res = run_cli("solve era " + g1.string() + " --init local");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("cardinality = 4") != std::string::npos);
}

TEST_CASE("oracle prints the optimum and rejects oversized instances") {
  auto g1 = temp_path("cli_g1d.mlst");
  run_cli("generate g1 --k 5 -o " + g1.string());
  CliResult res = run_cli("oracle " + g1.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("opt = 2") != std::string::npos);
  CHECK(res.output.find("witness = 10001") != std::string::npos);

  auto g3b3 = temp_path("cli_g3b3.mlst");
  run_cli("generate g3 --b 3 -o " + g3b3.string());
  CHECK(run_cli("oracle " + g3b3.string()).output.find("opt = 6") != std::string::npos);

  auto big = temp_path("cli_big.mlst");
  run_cli("generate random --n 12 --m 40 --k 30 --b 4 --seed 1 -o " + big.string());
  CliResult limited = run_cli("oracle " + big.string());
  CHECK(limited.exit_code == 1);
  CHECK(limited.output.find("TooManyLabels") != std::string::npos);
}

TEST_CASE("verify subcommands report PASS with exit 0") {
  auto g3 = temp_path("cli_g3c.mlst");
  run_cli("generate g3 --b 2 -o " + g3.string());
  CHECK(run_cli("verify corollary1 " + g3.string()).output.find("PASS") == 0);
  CHECK(run_cli("verify halving " + g3.string()).output.find("PASS") == 0);

  auto g2 = temp_path("cli_g2b.mlst");
  run_cli("generate g2 --k 10 -o " + g2.string());
  CHECK(run_cli("verify g2-local-opt " + g2.string()).output.find("PASS") == 0);
  CHECK(run_cli("verify archive " + g2.string() + " --seed 4 --budget 5000").output.find("PASS") == 0);

  auto random20 = temp_path("cli_r20.mlst");
  run_cli("generate random --n 10 --m 20 --k 20 --b 2 --seed 3 -o " + random20.string());
  CliResult res = run_cli("verify corollary1 " + random20.string());
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("TooManyLabels") != std::string::npos);
}

TEST_CASE("experiment runs a plan file and reruns byte-identically") {
  auto g1 = temp_path("cli_g1e.mlst");
  run_cli("generate g1 --k 8 -o " + g1.string());
  auto plan = temp_path("cli_plan.txt");
  {
    std::ofstream out(plan);
    out << "algorithm = one-plus-one-ea\ninstance = " << g1.string()
        << "\ntrials = 10\nbudget = k-ln-k\nmaster-seed = 0\ninit = random\n"
        << "target = feasible\ntarget = optimum\n";
  }
  auto dir1 = temp_path("cli_exp1"), dir2 = temp_path("cli_exp2");
  CliResult res = run_cli("experiment " + plan.string() + " -o " + dir1.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("10/10") != std::string::npos);  // all trials reach the g1 optimum
  CHECK(std::filesystem::exists(dir1 / "results.csv"));
  CHECK(std::filesystem::exists(dir1 / "summary.txt"));
  CliResult rerun = run_cli("experiment " + plan.string() + " -o " + dir2.string() + " --jobs 2");
  CHECK(rerun.exit_code == 0);
  std::ifstream a(dir1 / "results.csv"), b(dir2 / "results.csv");
  std::string ca((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string cb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(ca == cb);
  CHECK(ca.find("trial,seed,instance,algorithm,budget,") == 0);

  // zero trials is a usage error
  {
    std::ofstream out(plan);
    out << "algorithm = one-plus-one-ea\ninstance = " << g1.string()
        << "\ntrials = 0\nbudget = k-ln-k\nmaster-seed = 0\n";
  }
  CliResult zero = run_cli("experiment " + plan.string() + " -o " + temp_path("cli_exp3").string());
  CHECK(zero.exit_code == 2);
}

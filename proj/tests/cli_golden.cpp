#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "fncalc/binom_seq.hpp"
#include "fncalc/json_io.hpp"

using namespace fncalc;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FNCALC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string last_line(const std::string& text) {
  const std::string trimmed =
      text.ends_with('\n') ? text.substr(0, text.size() - 1) : text;
  const std::size_t pos = trimmed.rfind('\n');
  return pos == std::string::npos ? trimmed : trimmed.substr(pos + 1);
}

} // namespace

TEST_CASE("fn --json golden") {
  const RunResult r = run_cli("fn --n 2 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"pieces\":[{\"lo\":\"-3/2\",\"hi\":\"-1/2\",\"coeffs\":[\"1\"]},"
        "{\"lo\":\"-1/2\",\"hi\":\"1/2\",\"coeffs\":[\"2\"]},"
        "{\"lo\":\"1/2\",\"hi\":\"3/2\",\"coeffs\":[\"1\"]}]}\n");
  const RunResult f0 = run_cli("fn --n 0 --json");
  CHECK(f0.out == "{\"pieces\":[{\"lo\":\"-1/2\",\"hi\":\"1/2\",\"coeffs\":[\"1\"]}]}\n");
}

TEST_CASE("fn --json round trips through the library") {
  for (int n : {1, 5, 12}) {
    const RunResult r = run_cli("fn --n " + std::to_string(n) + " --json");
    REQUIRE(r.exit_code == 0);
    std::string body = r.out;
    REQUIRE(!body.empty());
    body.pop_back(); // trailing newline
    CHECK(from_json(body) == build_closed(n).fn);
  }
}

TEST_CASE("fn --csv") {
  const RunResult r = run_cli("fn --n 0 --csv 1/2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x,f(x)\n-0.5,1\n0,1\n0.5,0\n");
}

TEST_CASE("eval golden") {
  CHECK(run_cli("eval --n 2 --x 0").out == "2\n");
  CHECK(run_cli("eval --n 2 --x 1/2").out == "1\n"); // breakpoint joins the right piece
  CHECK(run_cli("eval --n 2 --x 99").out == "0\n");
  CHECK(run_cli("eval --n 3 --x -1/2 --decimal 3").out == "3\n");
}

TEST_CASE("norm golden") {
  CHECK(run_cli("norm --n 3 --p 2 --pow").out == "20\n");
  CHECK(run_cli("norm --n 3 --p 1").out == "8\n");
  CHECK(run_cli("norm --n 4 --p inf").out == "6\n");
  const RunResult r = run_cli("norm --n 3 --p 2 --decimal 6");
  CHECK(r.out == "4.472136\n"); // sqrt(20)
}

TEST_CASE("prodint golden") {
  CHECK(run_cli("prodint --m 1 --n 2").out == "3\n");
  CHECK(run_cli("prodint --m 1 --n 3").out == "6\n");
  CHECK(run_cli("prodint --m 3 --n 1").out == "6\n"); // symmetric, arguments swap
}

TEST_CASE("conv output") {
  const RunResult r = run_cli("conv --m 0 --n 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1 + x") != std::string::npos);
  CHECK(r.out.find("1 - x") != std::string::npos);
  const RunResult rr = run_cli("conv --m 0 --n 0 --r 2");
  CHECK(last_line(rr.out) == "lr_norm_pow(2) = 2/3");
  const RunResult js = run_cli("conv --m 1 --n 2 --json");
  std::string body = js.out;
  body.pop_back();
  CHECK(from_json(body) == conv_closed_form(1, 2).fn);
  const RunResult samples = run_cli("conv --m 0 --n 0 --samples 4");
  CHECK(samples.out.find("x,f(x)") != std::string::npos);
  CHECK(samples.out.find("0,1") != std::string::npos);
}

TEST_CASE("pascal golden") {
  CHECK(run_cli("pascal --rows 1").out == "1\n");
  CHECK(last_line(run_cli("pascal --rows 3").out) == "1 2 1");
  CHECK(last_line(run_cli("pascal --rows 7").out) == "1 6 15 20 15 6 1");
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli("verify --suite vandermonde --max-m 4 --max-n 4").exit_code == 0);
  CHECK(run_cli("verify --suite vandermonde --max-m 2 --max-n 2 --inject-fault").exit_code == 1);
  const RunResult all = run_cli("verify --suite all --max-m 3 --max-n 3");
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("total:") != std::string::npos);
  CHECK(all.out.find(" 0 fail") != std::string::npos);
}

TEST_CASE("verify report files") {
  const std::string path = "/tmp/fncalc_cli_report.json";
  const RunResult r =
      run_cli("verify --suite vandermonde --max-m 1 --max-n 1 --out " + path);
  CHECK(r.exit_code == 0);
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string content;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), got);
  fclose(f);
  remove(path.c_str());
  CHECK(content.find("\"records\"") != std::string::npos);
  CHECK(content.find("\"fail\":0") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("fn").exit_code == 2);                 // missing required --n
  CHECK(run_cli("fn --n -1").exit_code == 2);          // validation failure
  CHECK(run_cli("frobnicate").exit_code == 2);         // unknown subcommand
  CHECK(run_cli("eval --n 2 --x abc").exit_code == 2); // malformed rational
  CHECK(run_cli("norm --n 2 --p 0").exit_code == 2);
  CHECK(run_cli("norm --n 2 --p inf --pow").exit_code == 2);
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  CHECK(run_cli("verify --precision 16").exit_code == 2);
  CHECK(run_cli("verify --max-m 1 --max-n 1 --p 1/2").exit_code == 2); // exponent below 1
  CHECK(run_cli("verify --max-m 1 --max-n 1 --p 2,,3").exit_code == 2);
  CHECK(run_cli("fn --n 2 --json --csv 1/2").exit_code == 2); // mutually exclusive
}

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace definetti;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

cli::FigureSpec figure(int id) {
  cli::FigureSpec spec;
  spec.figure_id = id;
  return spec;
}

}  // namespace

TEST_CASE("compute prints exact and decimal forms") {
  CHECK(invoke({"compute", "sym-epsilon", "n=4", "k=2", "r=0", "d=2"}).out == "4/5 = 0.8\n");
  CHECK(invoke({"compute", "coherent-bound", "n=100", "k=10", "r=0"}).out == "1/5 = 0.2\n");
  CHECK(invoke({"compute", "exact-radius", "d=2", "n=10", "k=4", "l=1"}).out == "3\n");
  CHECK(invoke({"compute", "exact-radius", "lambda=9,1", "mu=4,0", "nu=6,0"}).out == "3\n");
  CHECK(invoke({"compute", "su2-delta", "j1=1/2", "j2=1/2", "j=1", "r=0"}).out ==
        "2/3 = 0.666666666667\n");
  CHECK(invoke({"compute", "heis-delta", "mu=1", "nu=1", "delta=0", "r=0"}).out == "1/2 = 0.5\n");
  CHECK(invoke({"compute", "closed-form-sum", "n=4", "k=2", "r=0"}).out == "2/3 = 0.666666666667\n");
  CHECK(cli::compute("sym-bound", {"n=100", "k=10", "r=0", "d=2"}).substr(0, 5) == "80.68");
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
  CHECK(invoke({"compute", "--help"}).code == cli::kExitOk);
  CHECK(invoke({"compute", "nonsense"}).code == cli::kExitUsage);
  CHECK(invoke({"compute", "sym-epsilon", "n=4", "k=9", "r=0", "d=2"}).code == cli::kExitUsage);
  CHECK(invoke({"compute", "sym-epsilon", "n=4", "k=2", "r=0"}).code == cli::kExitUsage);
  CHECK(invoke({"compute", "sym-epsilon", "n=4", "k=2", "r=0", "d=2", "q=1"}).code == cli::kExitUsage);
  CHECK(invoke({"compute", "exact-radius", "d=2", "n=4", "k=2", "l=3"}).code == cli::kExitUsage);
  CHECK(invoke({"figure", "7"}).code == cli::kExitUsage);
  CHECK(invoke({"figure", "1", "--j-min", "5", "--j-max", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"figure", "1", "--out", "/nonexistent-dir/x.csv"}).code == cli::kExitFailure);
  CHECK(invoke({"verify", "bogus"}).code == cli::kExitUsage);
  const auto bad = invoke({"compute", "nonsense"});
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("figure 1 anchors") {
  const auto rows = parse_csv(cli::figure_csv(figure(1)));
  REQUIRE(rows.size() == 42);
  const auto& header = rows[0];
  CHECK(header[0] == "r");
  CHECK(rows[1][column(header, "j=200")] == "0.498753117207");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t c = 2; c < header.size(); ++c) {
      CHECK(std::stod(rows[r][c]) <= std::stod(rows[r][c - 1]) + 1e-12);
    }
  }
}

TEST_CASE("figure 2 reaches zero at r = j") {
  const auto rows = parse_csv(cli::figure_csv(figure(2)));
  const auto& header = rows[0];
  const std::size_t c = column(header, "j=30");
  for (std::size_t r = 31; r < rows.size(); ++r) CHECK(rows[r][c] == "0");
  CHECK(rows[30][c] != "0");
}

TEST_CASE("figure 3 columns track each other") {
  const auto rows = parse_csv(cli::figure_csv(figure(3)));
  const auto& header = rows[0];
  for (long delta = 0; delta <= 10; ++delta) {
    const std::size_t a = column(header, "Delta=" + std::to_string(delta));
    const std::size_t b = column(header, "su2_j=" + std::to_string(200 - delta));
    double worst = 0.0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      worst = std::max(worst, std::abs(std::stod(rows[r][a]) - std::stod(rows[r][b])));
    }
    if (delta <= 9) {
      CHECK(worst <= 0.05);
    } else {
      CHECK(worst == doctest::Approx(0.0549635).epsilon(2e-5));
    }
  }
}

TEST_CASE("figure output is deterministic") {
  for (int id : {1, 2, 3}) {
    cli::FigureSpec serial;
    serial.figure_id = id;
    serial.threads = 1;
    cli::FigureSpec wide;
    wide.figure_id = id;
    wide.threads = 16;
    const std::string first = cli::figure_csv(serial);
    CHECK(first == cli::figure_csv(serial));
    CHECK(first == cli::figure_csv(wide));
  }
  const auto a = invoke({"figure", "1", "--j1", "10", "--j2", "10", "--r-max", "5"});
  const auto b = invoke({"figure", "1", "--j1", "10", "--j2", "10", "--r-max", "5", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify suites pass and are reproducible") {
  for (const auto& suite : cli::verify_suites()) {
    if (suite == "all" || suite == "mc") continue;
    std::ostringstream log;
    CHECK_MESSAGE(cli::verify(suite, {}, log), log.str());
  }
  std::ostringstream first;
  std::ostringstream second;
  cli::VerifyOptions opts;
  opts.seed = 5;
  opts.mc_samples = 2000;
  CHECK(cli::verify("mc", opts, first));
  CHECK(cli::verify("mc", opts, second));
  CHECK(first.str() == second.str());
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

namespace definetti::cli {

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = default_threads();
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& x : items) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form de Finetti error quantities, brute-force oracles and figure data",
               "definetti"};
  app.require_subcommand(1);

  auto* compute_cmd = app.add_subcommand("compute", "Evaluate one closed form");
  std::string subcommand;
  std::vector<std::string> params;
  compute_cmd->add_option("subcommand", subcommand, "One of: " + join(compute_subcommands()))
      ->required();
  compute_cmd->add_option("params", params, "key=value parameters");

  auto* figure_cmd = app.add_subcommand("figure", "Write the CSV data behind a figure");
  FigureSpec spec;
  figure_cmd->add_option("id", spec.figure_id, "Figure number (1, 2 or 3)")->required();
  figure_cmd->add_option("--out", spec.out_path, "Output path (default: stdout)");
  figure_cmd->add_option("--j1", spec.j1, "Spin j1 (default 100)");
  figure_cmd->add_option("--j2", spec.j2, "Spin j2 (default 100)");
  figure_cmd->add_option("--m2", spec.m2, "Magnetic number of |j2 m2> (default j2)");
  figure_cmd->add_option("--j-min", spec.j_min, "Smallest total spin j");
  figure_cmd->add_option("--j-max", spec.j_max, "Largest total spin j");
  figure_cmd->add_option("--r-max", spec.r_max, "Largest radius r (default 40)");
  figure_cmd->add_option("--mu", spec.mu, "Heisenberg mu (default 50)");
  figure_cmd->add_option("--nu", spec.nu, "Heisenberg nu (default 50)");
  figure_cmd->add_option("--delta-min", spec.delta_min, "Smallest sector label (default 0)");
  figure_cmd->add_option("--delta-max", spec.delta_max, "Largest sector label (default 10)");
  figure_cmd->add_option("--threads", spec.threads, "Worker threads (default: all cores)");

  auto* verify_cmd = app.add_subcommand("verify", "Run an oracle/property suite");
  std::string suite;
  VerifyOptions options;
  verify_cmd->add_option("suite", suite, "One of: " + join(verify_suites()))->required();
  verify_cmd->add_option("--seed", options.seed, "RNG seed (default 0)");
  verify_cmd->add_option("--tol", options.tolerance, "Oracle agreement tolerance (default 1e-10)");
  verify_cmd->add_option("--samples", options.mc_samples, "Monte Carlo samples (default 10000)");
  verify_cmd->add_flag("--parallel", options.parallel, "Run suites and samples concurrently");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (compute_cmd->parsed()) {
    try {
      out << compute(subcommand, params) << '\n';
      return kExitOk;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n' << compute_cmd->help();
    } catch (const std::exception& e) {
      // library precondition failures are malformed parameters
      err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
  }

  if (figure_cmd->parsed()) {
    std::string csv;
    try {
      csv = figure_csv(spec);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    if (!spec.out_path) {
      out << csv;
      return kExitOk;
    }
    std::ofstream file(*spec.out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << csv) || !file.flush()) {
      err << "error: cannot write " << *spec.out_path << '\n';
      return kExitFailure;
    }
    return kExitOk;
  }

  try {
    return verify(suite, options, out) ? kExitOk : kExitFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace definetti::cli

#ifndef DEFINETTI_TOOLS_CLI_HPP
#define DEFINETTI_TOOLS_CLI_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace definetti::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Malformed command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);
unsigned default_threads();

// compute ---------------------------------------------------------------

/// Evaluates one closed form from key=value parameters and returns the line
/// to print ("p/q = decimal", or a decimal alone for irrational values).
std::string compute(const std::string& subcommand, const std::vector<std::string>& params);
std::vector<std::string> compute_subcommands();

// figure ----------------------------------------------------------------

struct FigureSpec {
  int figure_id = 1;
  std::optional<std::string> j1;
  std::optional<std::string> j2;
  std::optional<std::string> m2;
  std::optional<std::string> j_min;
  std::optional<std::string> j_max;
  std::optional<long> r_max;
  std::optional<std::string> mu;
  std::optional<std::string> nu;
  std::optional<long> delta_min;
  std::optional<long> delta_max;
  std::optional<std::string> out_path;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// CSV text for the figure; throws UsageError on invalid ranges.
std::string figure_csv(const FigureSpec& spec);

// verify ----------------------------------------------------------------

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Numeric comparison tolerance for oracle agreement.
  double tolerance = 1e-10;
  long mc_samples = 10000;
  bool parallel = false;
};

std::vector<std::string> verify_suites();

/// Runs one suite or "all"; prints one line per check and returns true when
/// every check passed. Throws UsageError for an unknown suite.
bool verify(const std::string& suite, const VerifyOptions& options, std::ostream& out);

}  // namespace definetti::cli

#endif  // DEFINETTI_TOOLS_CLI_HPP

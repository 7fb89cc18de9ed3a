#ifndef PENTAFOLD_CLI_HPP
#define PENTAFOLD_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentafold::cli {

enum class Command { Seq, Sigma, VerifyPnt, VerifyPeriods, VerifyPowersums, Sum, Abel, Report };
enum class OutputFormat { Table, Csv, Json };

/// Exit statuses.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct RunConfig {
  Command command = Command::Report;
  std::optional<std::uint64_t> max_n;
  std::optional<std::uint64_t> degree;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> lambda;
  std::optional<double> rho;
  std::optional<std::uint64_t> count;
  OutputFormat format = OutputFormat::Table;
  std::optional<std::string> cache_path;

  // Command-specific switches.
  bool include_zero = false;           // seq
  bool interpolated = false;           // seq
  bool dump = false;                   // verify-pnt
  std::optional<std::uint64_t> trace;  // sigma
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError when a parameter is missing or out of range for the
/// chosen command.
void validate(const RunConfig& config);

/// Executes the command; the report goes to `out`, diagnostics to `err`.
/// Returns kPass, kFail or kUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (flags as documented in the README) and runs. PENTAFOLD_CACHE,
/// when set, overrides --cache.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pentafold::cli

#endif  // PENTAFOLD_CLI_HPP

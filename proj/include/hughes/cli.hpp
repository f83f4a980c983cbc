#ifndef HUGHES_CLI_HPP
#define HUGHES_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hughes {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitVerificationFailure = 1, kExitUsage = 2 };

struct RunConfig {
    std::string subcommand;
    std::uint64_t p = 0;
    std::uint64_t e = 0;
    std::string form = "reduced";
    std::string format = "json";
    std::string out_path;
    std::string section;
    bool exhaustive = false;
    bool with_plane = false;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::uint32_t max_n = 60;
    std::size_t desargues_samples = 2000;
    unsigned workers = 1;
    /// Ceiling on Q = p^(2e).
    std::uint64_t max_order = 6561;
};

/// Executes one validated configuration. JSON goes to `out` unless out_path is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hughes

#endif  // HUGHES_CLI_HPP

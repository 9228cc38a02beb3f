#ifndef SATGRAPH_CLI_HPP
#define SATGRAPH_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace satgraph::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kMalformedInput = 2,
    kBuildExhausted = 3,
    kUsageError = 4,
    kTooManyConstraints = 5,
    kNotSeparated = 6,
};

/// Parsed and validated command line.
struct RunConfig {
    std::string command;  // build | extend | verify | realize | stats | export
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<std::size_t> depth;
    std::uint64_t seed = 0;
    std::string mode = "certified";
    std::optional<std::uint32_t> m;
    std::size_t max_attempts = 1000;
    std::size_t levels = 1;
    std::size_t trials = 1000;
    std::uint32_t m_from = 1;
    std::uint32_t m_to = 1;
    std::string in;
    std::string out;
    std::size_t level = 0;
    bool check = false;
    std::string type_path;
    std::string format = "dot";
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satgraph::cli

#endif  // SATGRAPH_CLI_HPP

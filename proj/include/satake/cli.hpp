#pragma once

#include "satake/io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace satake {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitBadInput = 2, kExitCapExceeded = 3 };

/// Invalid command-line configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct JobConfig {
    std::string command;    // build | verify | cells | decompose
    std::string type;       // root datum descriptor
    std::string coweight;   // comma-separated, fundamental-coweight basis
    std::string coweight2;  // second factor for decompose
    std::string in;         // module document for verify
    std::string out;        // output path; stdout when empty
    std::string format = "json";
    std::optional<std::size_t> cap;
};

/// Comma-separated integers; the count must equal the rank.
Coweight parse_coweight(const std::string& text, std::size_t rank);

/// An explicit --cap wins, then SATAKE_CAP, then the default.
std::size_t resolve_cap(const std::optional<std::size_t>& flag);

Json cmd_build(const JobConfig& c);
/// Sets `passed` to the overall verdict.
Json cmd_verify(const JobConfig& c, bool& passed);
Json cmd_cells(const JobConfig& c);
Json cmd_decompose(const JobConfig& c);

/// Runs one job, writing the document to c.out or `out`, diagnostics to
/// `err`; returns the process exit code.
int run_job(const JobConfig& c, std::ostream& out, std::ostream& err);

/// Parses argv and runs the job.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace satake

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohr {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int model = 3;
inline constexpr int limit = 4;
}  // namespace exit_code

inline constexpr std::size_t default_limit = 100000;

/// Runs one `bohrcalc` command. `args` excludes the program name. Results
/// go to `out`, diagnostics to `err`; returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);

}  // namespace bohr

#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace lawvere::cli {

/// Exit codes: 0 certificate verified, 1 verification failed or theorem not
/// applicable, 2 malformed input.
enum ExitCode : int { kVerified = 0, kNotVerified = 1, kBadInput = 2 };

/// Runs one command. `args` excludes the program name. The JSON report goes
/// to `out`, diagnostics to `err`. Demo tables are read from `data_dir`
/// unless --data-dir overrides it.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const std::filesystem::path& data_dir);

/// FNV-1a 64-bit digest, rendered as 16 lowercase hex digits.
std::string fnv1a64(const std::string& bytes);

} // namespace lawvere::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fragile::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kUsageError = 2;

// Environment variable naming a default JSON config file.
constexpr const char* kConfigEnv = "FRAGILE_CONFIG";

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fragile::cli

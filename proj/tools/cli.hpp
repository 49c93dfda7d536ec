#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace solvable::cli {

/// Exit status: 0 ok, 1 domain error, 2 usage error.
enum Exit : int { kOk = 0, kDomain = 1, kUsage = 2 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed for randomized checks: SOLVABLE_SEED if set and numeric, else 42.
unsigned long long default_seed();

}  // namespace solvable::cli

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace paracount {

/// Default cap on exhaustive enumerations; PARACOUNT_LIMIT overrides it.
inline constexpr std::uint64_t kDefaultLimit = 10'000'000;

/// Runs one command line (without the program name). Writes a single JSON
/// object to `out` and diagnostics to `err`. Returns 0 on success, 1 on a
/// domain error (its name is printed to `err`), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paracount

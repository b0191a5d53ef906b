#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hgs
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::uint64_t default_seed = 42;

/// Runs one `hgs` subcommand. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

/// The golden suite behind `hgs selftest`. Prints `PASS <name>` or
/// `FAIL <name>` per item; returns true when everything passed.
bool run_selftest( std::uint64_t seed, std::ostream& out );

} // namespace hgs

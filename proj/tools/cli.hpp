#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "minci/blocks.hpp"

namespace minci::cli {

/// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1; // verification failure or numerical failure
inline constexpr int exit_usage = 2;

/// hartree in eV (CODATA 2018), used by --ev.
inline constexpr double hartree_ev = 27.211386245988;

/// Runs one command line; args excludes the program name. `catalog` is the
/// block catalog checked by `verify`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const BlockCatalog &catalog = default_catalog());

} // namespace minci::cli

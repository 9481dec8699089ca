#pragma once

#include <ostream>
#include <span>
#include <string>

namespace polyhedra::cli {

/// Runs one invocation; args exclude the program name. Exit codes: 0 verified
/// or constructed, 1 verification failed (report on `out`), 2 bad input
/// (message on `err`).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polyhedra::cli

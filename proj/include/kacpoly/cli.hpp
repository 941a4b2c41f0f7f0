#pragma once

#include <ostream>

namespace kacpoly::cli {

/// Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal
/// consistency failure (non-integral result or methods disagreeing).
enum ExitCode : int { ok = 0, usage = 1, domain = 2, consistency = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace kacpoly::cli

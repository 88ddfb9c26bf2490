#pragma once

/**
 * @file cli.hpp
 * @brief The rowmotion command line: iterate, formula, phi, orbit, verify.
 *
 * Exit codes: 0 success, 1 a verification failed, 2 usage error, 3
 * arithmetic fault.  Output is JSON unless --plain is given.
 */

#include <ostream>
#include <string>
#include <vector>

namespace rowmotion::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitArithmetic = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rowmotion::cli

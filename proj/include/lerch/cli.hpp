#ifndef LERCH_CLI_HPP
#define LERCH_CLI_HPP

#include <ostream>
#include <string_view>

#include "lerch/numeric.hpp"

namespace lerch {

/// Exit codes of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parameter literal: real or complex constants built from numbers, pi, i,
/// sqrt(), exp(), + - * / ^ and parentheses. Throws std::invalid_argument.
Complex parse_literal(std::string_view text);

}  // namespace lerch

#endif

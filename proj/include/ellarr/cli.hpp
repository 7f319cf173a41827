#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellarr::cli {

/// Exit statuses.
inline constexpr int kSuccess = 0;
inline constexpr int kParseError = 1;
inline constexpr int kRejected = 2;

/// Entry point of the command-line tool; args excludes the program name.
///
///   validate FILE
///   flats FILE [--json]
///   cohomology FILE [--json] [--threads N]
///   oracle FILE [--json]
///
/// FILE may be "-" for standard input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellarr::cli

#pragma once

// walldiv command line: wall-test, class, exists, square, catalog,
// coisotropic, lagrangian, scan. Every command writes JSON (JSON-lines for
// catalog and scan). Exit status 0 on success, 2 on invalid input, 1 on an
// internal error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace walldiv::cli {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_invalid = 2;

/// Default directory for relative --output paths.
constexpr const char* output_dir_env = "WALLDIV_OUTPUT_DIR";

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};
/// "a..b" or "a"; throws DomainError on malformed or empty ranges.
Range parse_range(const std::string& text);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walldiv::cli

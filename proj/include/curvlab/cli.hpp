#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvlab::cli {

// Exit codes of `curvlab`.
enum ExitCode : int {
    kTrue = 0,      // verdict true, or the construction succeeded
    kFalse = 1,     // verdict false; the report carries witnesses
    kInvalid = 2,   // input or domain error
    kResource = 3,  // a size cap was hit
};

inline constexpr std::size_t kDefaultMaxFaces = 5'000'000;

// Runs one command; `args` excludes the program name. The JSON report goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvlab::cli

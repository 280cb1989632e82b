#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pejm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUnsupported = 2;

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pejm::cli

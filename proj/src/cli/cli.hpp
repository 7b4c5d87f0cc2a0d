#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monogen::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kOutDirVariable = "MONOGEN_OUT_DIR";

// args excludes the program name. Returns the process exit code: 0 iff
// every instance completed without error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monogen::cli

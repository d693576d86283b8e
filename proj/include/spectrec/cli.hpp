#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spectrec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitExpect = 3;
inline constexpr int kExitUsage = 4;

// Runs one command line (without the program name). Machine output goes to
// out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectrec::cli

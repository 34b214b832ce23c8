// Command dispatch for the ggp tool.  Exit codes: 0 ok, 1 invalid input,
// 2 precondition failure, 3 bound exceeded, 4 verification mismatch.

#ifndef GGP_CLI_HPP
#define GGP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ggp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitBoundExceeded = 3;
inline constexpr int kExitVerifyMismatch = 4;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ggp::cli

#endif

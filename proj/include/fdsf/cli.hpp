#ifndef FDSF_CLI_HPP
#define FDSF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fdsf {

// Exit codes: 0 success, 2 unparseable input, 3 validation failure,
// 4 enumeration budget exhausted, 1 anything else.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitValidationError = 3;
inline constexpr int kExitBudgetError = 4;
inline constexpr int kExitInternalError = 1;

// Full CLI entry point; args excludes the program name. Output is
// deterministic byte-for-byte for a fixed argument vector.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdsf

#endif

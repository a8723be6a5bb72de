#ifndef TVDANCE_CLI_HPP
#define TVDANCE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tvdance::cli {

// Exit codes: 0 valid / feasible, 1 invalid / infeasible / exhausted,
// 2 usage or I/O error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

// Entry point for the tvdance tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvdance::cli

#endif  // TVDANCE_CLI_HPP

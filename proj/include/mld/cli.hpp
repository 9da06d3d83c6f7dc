#ifndef MLD_CLI_HPP
#define MLD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mld {

// Exit codes: 0 success (minus infinity is an answer, not an error),
// 2 parse/validation error, 3 uncertified optimization, 4 oracle
// disagreement.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUncertified = 3;
inline constexpr int kExitOracleDisagreement = 4;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mld

#endif

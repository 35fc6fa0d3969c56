#ifndef GORENSTEIN_CLI_HPP
#define GORENSTEIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gorenstein::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kBadInput = 2;

/// Environment variable read by `classify` when --budget is absent.
inline constexpr const char* kBudgetEnv = "GORENSTEIN_BUDGET";

/// Entry point behind the executable. `args` excludes the program name.
///
///   delta     --simplex FILE | --generators FILE [--json]
///   construct --family SPEC [--vertex-form]
///   classify  --v V --k K [--budget N] [--threads T]
///   count     --v V [--k K]
///   verify    [--suite fast|all]
///
/// SPEC is a FamilySpec JSON object or a path to a file holding one.
/// Errors print "error: <Kind>: <message>" as a single line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gorenstein::cli

#endif  // GORENSTEIN_CLI_HPP

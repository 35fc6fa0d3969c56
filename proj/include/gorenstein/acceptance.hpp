#ifndef GORENSTEIN_ACCEPTANCE_HPP
#define GORENSTEIN_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gorenstein {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

enum class Suite {
  Fast,  // skips the v = 9 classification
  All,
};

/// Runs the eight end-to-end criteria in order. Time limits count as part
/// of each criterion.
std::vector<CriterionResult> run_acceptance(Suite suite);

/// "PASS  3  title  (0.12 s)  detail"
std::string format_result(const CriterionResult& r);

/// Prints one line per criterion plus a summary; returns true when all pass.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace gorenstein

#endif  // GORENSTEIN_ACCEPTANCE_HPP

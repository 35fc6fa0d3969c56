#ifndef GORENSTEIN_CLASSIFIER_HPP
#define GORENSTEIN_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gorenstein/abelian.hpp"
#include "gorenstein/delta.hpp"
#include "gorenstein/lambda.hpp"

namespace gorenstein {

inline constexpr std::uint64_t kDefaultSearchBudget = 2'000'000'000;

struct SearchConfig {
  /// Ceiling on the number of search-tree nodes visited, over all partitions.
  std::uint64_t budget = kDefaultSearchBudget;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SearchProgress {
  std::uint64_t nodes = 0;
  std::size_t partitions_done = 0;
  std::size_t partitions_total = 0;
  std::size_t candidates_found = 0;
};

class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(const std::string& what, SearchProgress progress)
      : Error(ErrorKind::BudgetExceeded, what), progress_(progress) {}

  const SearchProgress& progress() const noexcept { return progress_; }

 private:
  SearchProgress progress_;
};

/// One equivalence class found by the search.
struct ClassifiedGroup {
  std::int64_t dim = 0;
  AbstractGroup structure;
  LambdaGroup group = LambdaGroup::trivial(1);
  DeltaPolynomial delta = DeltaPolynomial({1});
  std::string key;  // canonical_form(group)
  std::optional<std::string> matched_family;
};

/// Every subgroup of (Q/Z)^{d+1}, up to coordinate permutation, that has
/// order v, is not a lattice pyramid, has integral heights, and whose
/// height histogram is 1 + t^{k+1} + ... + t^{(v-1)(k+1)}. All d up to
/// 4(v-1)(k+1)-2 are covered; nothing below the lower bound v(k+1)-1 is
/// filtered out, so verify_bounds is a genuine check.
///
/// For each abstract group G of order v the search runs over multisets of
/// nonzero characters of G (one per ambient coordinate). Partial height
/// sums only grow as columns are added, which drives the pruning.
/// Results are sorted by (dim, key) and identical across runs.
/// Throws SearchBudgetExceeded with a progress report.
std::vector<ClassifiedGroup> search(std::int64_t v, std::int64_t k, const SearchConfig& config = {});

struct BoundsReport {
  std::int64_t lower = 0;  // v(k+1) - 1
  std::int64_t upper = 0;  // 4(v-1)(k+1) - 2
  std::int64_t min_dim = 0;
  std::int64_t max_dim = 0;
  std::size_t classes = 0;
};

/// Checks lower <= d <= upper for every class and that exactly one class
/// sits at d = lower, namely the one generated by (1/v, ..., 1/v).
/// Throws BoundViolation naming the offending class.
BoundsReport verify_bounds(const std::vector<ClassifiedGroup>& classes, std::int64_t v, std::int64_t k);

/// canonical_form of the group generated by (1/v, ..., 1/v) in v(k+1) coordinates.
std::string uniform_class_key(std::int64_t v, std::int64_t k);

}  // namespace gorenstein

#endif  // GORENSTEIN_CLASSIFIER_HPP

#include "gorenstein/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <queue>
#include <thread>

#include "gorenstein/catalog.hpp"

namespace gorenstein {

namespace {

struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

bool less(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Everything about one abstract group that the walkers share read-only.
// Heights are scaled by the group exponent e so they stay integral.
struct GroupTables {
  AbstractGroup group;
  std::int64_t order = 0;
  std::int64_t exponent = 1;
  std::int64_t step = 0;        // e (k+1): spacing of the target heights
  std::int64_t max_height = 0;  // e (v-1)(k+1)
  std::int64_t total = 0;       // e (k+1) v (v-1) / 2: sum of all heights
  std::int64_t max_columns = 0; // 4(v-1)(k+1) - 1

  std::vector<Character> chars;                  // nonzero characters, search order
  std::vector<std::vector<std::int64_t>> value;  // [char][element]
  std::vector<std::int64_t> weight;              // sum of value over elements
  // over the suffix of characters starting at i
  std::vector<std::vector<Ratio>> min_ratio, max_ratio;  // [i][element]
  std::vector<std::int64_t> suffix_max_weight;
};

GroupTables build_tables(const AbstractGroup& g, std::int64_t v, std::int64_t k, std::int64_t max_columns) {
  GroupTables t;
  t.group = g;
  t.order = v;
  t.exponent = g.exponent();
  t.step = t.exponent * (k + 1);
  t.max_height = t.exponent * (v - 1) * (k + 1);
  t.total = t.exponent * (k + 1) * v * (v - 1) / 2;
  t.max_columns = max_columns;

  for (auto& chi : characters(g))
    if (!chi.is_zero()) t.chars.push_back(std::move(chi));
  // higher-order characters first; stable on the mixed-radix order
  std::stable_sort(t.chars.begin(), t.chars.end(),
                   [](const Character& a, const Character& b) { return a.order > b.order; });

  const std::size_t n = t.chars.size();
  for (const auto& chi : t.chars) {
    t.value.push_back(chi.values);
    std::int64_t w = 0;
    for (auto x : chi.values) w += x;
    t.weight.push_back(w);
  }

  t.min_ratio.assign(n + 1, std::vector<Ratio>(static_cast<std::size_t>(v)));
  t.max_ratio.assign(n + 1, std::vector<Ratio>(static_cast<std::size_t>(v)));
  t.suffix_max_weight.assign(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    t.suffix_max_weight[i] = std::max(t.suffix_max_weight[i + 1], t.weight[i]);
    for (std::size_t e = 0; e < static_cast<std::size_t>(v); ++e) {
      Ratio r{t.value[i][e], t.weight[i]};
      if (i + 1 == n) {
        t.min_ratio[i][e] = t.max_ratio[i][e] = r;
      } else {
        t.min_ratio[i][e] = less(r, t.min_ratio[i + 1][e]) ? r : t.min_ratio[i + 1][e];
        t.max_ratio[i][e] = less(t.max_ratio[i + 1][e], r) ? r : t.max_ratio[i + 1][e];
      }
    }
  }
  return t;
}

struct Shared {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
};

struct Aborted {};

// Depth-first walk over column multiplicities for one partition.
class Walker {
 public:
  Walker(const GroupTables& t, Shared& shared)
      : t_(t),
        shared_(shared),
        counts_(t.chars.size(), 0),
        heights_(static_cast<std::size_t>(t.order), 0) {}

  std::vector<std::vector<std::int64_t>> run(std::int64_t first_count) {
    const std::size_t n = t_.chars.size();
    if (n == 0) return {};
    counts_[0] = first_count;
    for (std::size_t e = 0; e < heights_.size(); ++e) heights_[e] = first_count * t_.value[0][e];
    walk(1, first_count * t_.weight[0], first_count);
    flush();
    return std::move(found_);
  }

  std::uint64_t flushed_nodes() const { return total_local_; }

 private:
  void tick() {
    if (++local_ < 4096) return;
    flush();
  }

  void flush() {
    total_local_ += local_;
    const auto now = shared_.nodes.fetch_add(local_) + local_;
    local_ = 0;
    if (now > shared_.budget) shared_.aborted = true;
    if (shared_.aborted) throw Aborted{};
  }

  void walk(std::size_t i, std::int64_t used, std::int64_t cols) {
    tick();
    const std::int64_t remaining = t_.total - used;
    if (remaining == 0) {
      leaf(cols);
      return;
    }
    const std::size_t n = t_.chars.size();
    if (i >= n || !feasible(i, remaining, cols)) return;

    if (i + 1 == n) {
      if (remaining % t_.weight[i] != 0) return;
      const std::int64_t c = remaining / t_.weight[i];
      if (cols + c > t_.max_columns) return;
      bool ok = true;
      for (std::size_t e = 0; e < heights_.size(); ++e) {
        heights_[e] += c * t_.value[i][e];
        if (heights_[e] > t_.max_height) ok = false;
      }
      counts_[i] = c;
      if (ok) leaf(cols + c);
      counts_[i] = 0;
      for (std::size_t e = 0; e < heights_.size(); ++e) heights_[e] -= c * t_.value[i][e];
      return;
    }

    std::int64_t c = 0;
    for (;;) {
      counts_[i] = c;
      walk(i + 1, used + c * t_.weight[i], cols + c);
      if (used + (c + 1) * t_.weight[i] > t_.total || cols + c + 1 > t_.max_columns) break;
      bool ok = true;
      for (std::size_t e = 0; e < heights_.size(); ++e) {
        heights_[e] += t_.value[i][e];
        if (heights_[e] > t_.max_height) ok = false;
      }
      ++c;
      if (!ok) break;
    }
    for (std::size_t e = 0; e < heights_.size(); ++e) heights_[e] -= c * t_.value[i][e];
    counts_[i] = 0;
  }

  // Interval bounds on every final height, then a perfect matching of
  // nonzero elements to the target heights step, 2 step, ..., (v-1) step.
  bool feasible(std::size_t i, std::int64_t remaining, std::int64_t cols) {
    if (cols + ceil_div(remaining, t_.suffix_max_weight[i]) > t_.max_columns) return false;
    const std::int64_t slots = t_.order - 1;
    intervals_.clear();
    for (std::size_t e = 1; e < heights_.size(); ++e) {
      const Ratio& lo_r = t_.min_ratio[i][e];
      const Ratio& hi_r = t_.max_ratio[i][e];
      std::int64_t lo = heights_[e] + ceil_div(remaining * lo_r.num, lo_r.den);
      std::int64_t hi = heights_[e] + (remaining * hi_r.num) / hi_r.den;
      hi = std::min(hi, t_.max_height);
      const std::int64_t lo_slot = std::max<std::int64_t>(1, ceil_div(lo, t_.step));
      const std::int64_t hi_slot = hi / t_.step;
      if (lo_slot > hi_slot || lo_slot > slots) return false;
      intervals_.emplace_back(lo_slot, hi_slot);
    }
    std::sort(intervals_.begin(), intervals_.end());
    std::priority_queue<std::int64_t, std::vector<std::int64_t>, std::greater<>> open;
    std::size_t next = 0;
    for (std::int64_t slot = 1; slot <= slots; ++slot) {
      while (next < intervals_.size() && intervals_[next].first <= slot) open.push(intervals_[next++].second);
      if (open.empty() || open.top() < slot) return false;
      open.pop();
    }
    return true;
  }

  void leaf(std::int64_t cols) {
    if (cols > t_.max_columns) return;
    // heights must be exactly step, 2 step, ..., (v-1) step on nonzero elements
    sorted_.assign(heights_.begin() + 1, heights_.end());
    std::sort(sorted_.begin(), sorted_.end());
    for (std::size_t j = 0; j < sorted_.size(); ++j)
      if (sorted_[j] != static_cast<std::int64_t>(j + 1) * t_.step) return;
    found_.push_back(counts_);
  }

  const GroupTables& t_;
  Shared& shared_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> heights_;
  std::vector<std::pair<std::int64_t, std::int64_t>> intervals_;
  std::vector<std::int64_t> sorted_;
  std::vector<std::vector<std::int64_t>> found_;
  std::uint64_t local_ = 0;
  std::uint64_t total_local_ = 0;
};

LambdaGroup group_from_counts(const GroupTables& t, const std::vector<std::int64_t>& counts) {
  std::size_t ambient = 0;
  for (auto c : counts) ambient += static_cast<std::size_t>(c);
  std::vector<ResidueVector> gens;
  std::int64_t stride = 1;
  for (auto factor : t.group.factors) {
    std::vector<Rational> coords;
    coords.reserve(ambient);
    for (std::size_t c = 0; c < counts.size(); ++c)
      coords.insert(coords.end(), static_cast<std::size_t>(counts[c]),
                    Rational(t.value[c][static_cast<std::size_t>(stride)], t.exponent));
    gens.emplace_back(std::move(coords));
    stride *= factor;
  }
  return LambdaGroup::from_generators(ambient, gens, Strictness::Strict);
}

struct Task {
  std::size_t table = 0;
  std::int64_t first_count = 0;
};

}  // namespace

std::string uniform_class_key(std::int64_t v, std::int64_t k) {
  const auto gen = ResidueVector::from_blocks({{Rational(1, v), v * (k + 1)}});
  return canonical_form(LambdaGroup::from_generators(gen.size(), std::span(&gen, 1), Strictness::Strict));
}

std::vector<ClassifiedGroup> search(std::int64_t v, std::int64_t k, const SearchConfig& config) {
  if (v < 1 || k < 0) throw Error(ErrorKind::InvalidParams, "search: need v >= 1 and k >= 0");
  if (v == 1) return {};  // every volume-one simplex is a pyramid
  const std::int64_t max_columns = 4 * (v - 1) * (k + 1) - 1;

  std::vector<GroupTables> tables;
  for (const auto& g : groups_of_order(v)) tables.push_back(build_tables(g, v, k, max_columns));

  std::vector<Task> tasks;
  for (std::size_t ti = 0; ti < tables.size(); ++ti) {
    const auto& t = tables[ti];
    if (t.chars.empty()) continue;
    for (std::int64_t c = 0;; ++c) {
      if (c * t.weight[0] > t.total || c > t.max_columns) break;
      bool ok = true;
      for (auto x : t.value[0]) ok = ok && c * x <= t.max_height;
      if (!ok) break;
      tasks.push_back({ti, c});
    }
  }

  Shared shared;
  shared.budget = config.budget;
  std::vector<std::vector<std::vector<std::int64_t>>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::atomic<std::size_t> candidates{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      Walker walker(tables[tasks[idx].table], shared);
      try {
        results[idx] = walker.run(tasks[idx].first_count);
      } catch (const Aborted&) {
        return;
      }
      candidates += results[idx].size();
      ++done;
    }
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  if (shared.aborted) {
    SearchProgress progress{shared.nodes.load(), done.load(), tasks.size(), candidates.load()};
    throw SearchBudgetExceeded("search(" + std::to_string(v) + "," + std::to_string(k) +
                                   "): node budget of " + std::to_string(config.budget) +
                                   " exhausted after " + std::to_string(progress.partitions_done) +
                                   "/" + std::to_string(progress.partitions_total) + " partitions",
                               progress);
  }

  // reference keys for naming
  std::vector<std::pair<std::string, std::string>> references;
  for (const auto& f : reference_families(v, k)) {
    std::string name(family_name(f.family));
    if (f.family == Family::Chain) {
      name += ":";
      for (std::size_t i = 0; i < f.chain.size(); ++i) name += (i ? "," : "") + std::to_string(f.chain[i]);
    }
    references.emplace_back(canonical_form(construct_group(f)), std::move(name));
  }

  std::map<std::pair<std::int64_t, std::string>, ClassifiedGroup> classes;
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    const auto& t = tables[tasks[idx].table];
    for (const auto& counts : results[idx]) {
      ClassifiedGroup cls;
      cls.group = group_from_counts(t, counts);
      cls.dim = static_cast<std::int64_t>(cls.group.ambient()) - 1;
      cls.key = canonical_form(cls.group);
      const auto sort_key = std::make_pair(cls.dim, cls.key);
      if (classes.contains(sort_key)) continue;
      cls.structure = t.group;
      cls.delta = delta_of(cls.group);
      for (const auto& [key, name] : references) {
        if (key == cls.key) {
          cls.matched_family = name;
          break;
        }
      }
      classes.emplace(sort_key, std::move(cls));
    }
  }

  std::vector<ClassifiedGroup> out;
  for (auto& [_, cls] : classes) out.push_back(std::move(cls));
  return out;
}

BoundsReport verify_bounds(const std::vector<ClassifiedGroup>& classes, std::int64_t v, std::int64_t k) {
  BoundsReport report;
  report.lower = v * (k + 1) - 1;
  report.upper = 4 * (v - 1) * (k + 1) - 2;
  report.classes = classes.size();
  if (classes.empty()) return report;

  const std::string uniform = uniform_class_key(v, k);
  report.min_dim = classes.front().dim;
  report.max_dim = classes.front().dim;
  std::size_t at_lower = 0;
  for (const auto& cls : classes) {
    report.min_dim = std::min(report.min_dim, cls.dim);
    report.max_dim = std::max(report.max_dim, cls.dim);
    if (cls.dim < report.lower || cls.dim > report.upper)
      throw Error(ErrorKind::BoundViolation, "class " + cls.key + " has d = " + std::to_string(cls.dim) +
                                                 " outside [" + std::to_string(report.lower) + ", " +
                                                 std::to_string(report.upper) + "]");
    if (cls.dim == report.lower) {
      ++at_lower;
      if (cls.key != uniform)
        throw Error(ErrorKind::BoundViolation,
                    "class " + cls.key + " attains the lower bound but is not generated by (1/v, ..., 1/v)");
    } else if (cls.key == uniform) {
      throw Error(ErrorKind::BoundViolation, "uniform class found away from the lower bound");
    }
  }
  if (at_lower != 1)
    throw Error(ErrorKind::BoundViolation,
                std::to_string(at_lower) + " classes attain the lower bound, expected exactly one");
  return report;
}

}  // namespace gorenstein

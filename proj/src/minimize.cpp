#include "rulemine/minimize.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace rulemine {

namespace {

constexpr std::uint64_t pack(std::uint32_t care_mask, std::uint32_t values) {
  return (static_cast<std::uint64_t>(care_mask) << 32) | values;
}

constexpr Implicant unpack(std::uint64_t key) {
  return Implicant{static_cast<std::uint32_t>(key >> 32),
                   static_cast<std::uint32_t>(key & 0xffffffffu)};
}

// Dynamic bitset over the success combinations of one covering problem.
struct ColumnSet {
  std::vector<std::uint64_t> words;

  explicit ColumnSet(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const {
    return (words[i >> 6] >> (i & 63)) & 1u;
  }
  bool none() const {
    return std::all_of(words.begin(), words.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  void subtract(const ColumnSet& other) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= ~other.words[i];
  }
  bool intersects(const ColumnSet& other) const {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i] & other.words[i]) return true;
    }
    return false;
  }
  int first_set() const {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i]) return static_cast<int>(i * 64 + std::countr_zero(words[i]));
    }
    return -1;
  }
};

int total_literals(const std::vector<Implicant>& rules) {
  int sum = 0;
  for (const auto& r : rules) sum += r.literal_count();
  return sum;
}

// Exact minimum-cost cover search over the prime chart. Cost order:
// rule count, then total literals, then the sorted rule sequence.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Implicant>& primes,
              const std::vector<Combination>& columns) {
    rows_ = primes;
    std::sort(rows_.begin(), rows_.end());
    covers_.reserve(rows_.size());
    for (const auto& row : rows_) {
      ColumnSet cs(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (row.covers(columns[c])) cs.set(c);
      }
      covers_.push_back(std::move(cs));
    }
    row_for_column_.assign(columns.size(), {});
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (covers_[r].test(c)) row_for_column_[c].push_back(static_cast<int>(r));
      }
    }
    columns_ = static_cast<int>(columns.size());
  }

  std::vector<Implicant> run() {
    ColumnSet uncovered(columns_);
    for (int c = 0; c < columns_; ++c) uncovered.set(c);
    std::vector<int> chosen;
    std::vector<bool> banned(rows_.size(), false);
    search(uncovered, chosen, banned);
    return best_rules_;
  }

 private:
  void record(const std::vector<int>& chosen) {
    std::vector<Implicant> rules;
    rules.reserve(chosen.size());
    for (int r : chosen) rules.push_back(rows_[r]);
    std::sort(rules.begin(), rules.end());
    const int literals = total_literals(rules);
    if (!has_best_ || std::tuple(rules.size(), literals, rules) <
                          std::tuple(best_rules_.size(), best_literals_, best_rules_)) {
      best_rules_ = std::move(rules);
      best_literals_ = literals;
      has_best_ = true;
    }
  }

  // Greedy set of pairwise row-disjoint columns; any cover needs one
  // distinct row per counted column.
  int lower_bound(const ColumnSet& uncovered) const {
    ColumnSet remaining = uncovered;
    int bound = 0;
    while (true) {
      const int c = remaining.first_set();
      if (c < 0) break;
      ++bound;
      for (int r : row_for_column_[c]) remaining.subtract(covers_[r]);
    }
    return bound;
  }

  void search(const ColumnSet& uncovered, std::vector<int>& chosen,
              const std::vector<bool>& banned) {
    if (uncovered.none()) {
      record(chosen);
      return;
    }
    if (has_best_) {
      const std::size_t floor = chosen.size() + lower_bound(uncovered);
      // Equal-size covers may still win on literals, so only a strictly
      // worse bound prunes.
      if (floor > best_rules_.size()) return;
    }

    // Branch on the uncovered column with the fewest usable rows.
    int branch_col = -1;
    int branch_options = 0;
    for (int c = 0; c < columns_; ++c) {
      if (!uncovered.test(c)) continue;
      int options = 0;
      for (int r : row_for_column_[c]) {
        if (!banned[r]) ++options;
      }
      if (branch_col < 0 || options < branch_options) {
        branch_col = c;
        branch_options = options;
      }
    }
    if (branch_options == 0) return;  // dead end under the current bans

    std::vector<int> candidates;
    for (int r : row_for_column_[branch_col]) {
      if (!banned[r]) candidates.push_back(r);
    }
    // Each branch commits one candidate and bans the earlier ones, so the
    // same cover is never rebuilt in a different order.
    std::vector<bool> child_banned = banned;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const int r = candidates[i];
      if (i > 0) child_banned[candidates[i - 1]] = true;
      ColumnSet next = uncovered;
      next.subtract(covers_[r]);
      chosen.push_back(r);
      search(next, chosen, child_banned);
      chosen.pop_back();
    }
  }

  std::vector<Implicant> rows_;
  std::vector<ColumnSet> covers_;
  std::vector<std::vector<int>> row_for_column_;
  int columns_ = 0;

  bool has_best_ = false;
  std::vector<Implicant> best_rules_;
  int best_literals_ = 0;
};

}  // namespace

std::vector<Implicant> generate_prime_implicants(const TruthTable& table) {
  const int k = table.schema.k();
  const std::uint32_t full = (1u << k) - 1u;

  // Generation g holds every all-success cube with g don't-cares. A cube
  // can be enlarged along an attribute exactly when its mirror (same mask,
  // that value bit flipped) is also all-success, i.e. present in the same
  // generation; cubes with no mirror anywhere are prime.
  std::unordered_set<std::uint64_t> gen;
  for (Combination c = 0; c < table.outcomes.size(); ++c) {
    if (table.outcomes[c]) gen.insert(pack(full, c));
  }

  std::vector<Implicant> primes;
  while (!gen.empty()) {
    std::unordered_set<std::uint64_t> next;
    for (const auto key : gen) {
      const Implicant cube = unpack(key);
      bool enlargeable = false;
      for (int b = 0; b < k; ++b) {
        const std::uint32_t bit = 1u << b;
        if (!(cube.care_mask & bit)) continue;
        if (gen.contains(pack(cube.care_mask, cube.values ^ bit))) {
          enlargeable = true;
          // Insert the merged cube from its zero side only.
          if (!(cube.values & bit)) {
            next.insert(pack(cube.care_mask & ~bit, cube.values));
          }
        }
      }
      if (!enlargeable) primes.push_back(cube);
    }
    gen = std::move(next);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

RuleSet select_cover(const std::vector<Implicant>& primes, const TruthTable& table) {
  const auto successes = table.success_combinations();
  if (successes.empty()) return RuleSet{table.schema, {}};

  for (const auto c : successes) {
    const bool covered = std::any_of(primes.begin(), primes.end(),
                                     [c](const Implicant& p) { return p.covers(c); });
    if (!covered) {
      throw std::logic_error("prime set fails to cover success combination " +
                             std::to_string(c));
    }
  }

  CoverSearch search(primes, successes);
  return RuleSet{table.schema, search.run()};
}

RuleSet minimize(const TruthTable& table) {
  return select_cover(generate_prime_implicants(table), table);
}

}  // namespace rulemine

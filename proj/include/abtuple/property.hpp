#pragma once

// Decision procedure for property (P_{r,s}): for every r-subset L of the
// tuple positions and every s-subset I of L there must be another s-subset
// J of L (J != I as position sets) with the same element sum.

#include <abtuple/errors.hpp>
#include <abtuple/integer.hpp>
#include <abtuple/tuple.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace abtuple {

/// Default cap on C(q,r) * C(r,s)^2 elementary sum comparisons.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

enum class SearchMode {
  reference,  // pairwise exact comparison of all s-subset sums
  indexed,    // ordered map from sum to multiplicity
};

struct PropertyOptions {
  Integer budget = kDefaultBudget;
  SearchMode mode = SearchMode::reference;
  unsigned workers = 1;
};

struct PropertyWitness {
  std::vector<std::size_t> subset;   // the r positions l(1) < ... < l(r)
  std::vector<std::size_t> indices;  // the s positions inside `subset` with no partner
};

struct PropertyReport {
  bool holds = true;
  std::size_t r = 0;
  std::size_t s = 0;
  std::optional<PropertyWitness> witness;  // present iff !holds
};

inline void check_property_arity(std::size_t q, std::size_t r, std::size_t s) {
  if (s < 1 || r <= s || r > q) {
    throw DomainError("property arity requires q >= r > s >= 1 (got q=" + std::to_string(q) +
                      ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  }
}

/// Number of elementary comparisons charged against the budget.
inline Integer property_work(std::size_t q, std::size_t r, std::size_t s) {
  const Integer inner = binomial(r, s);
  return binomial(q, r) * inner * inner;
}

namespace detail {

/// First s-subset (as tuple positions, lexicographic) of `subset` that has no
/// distinct partner with equal sum.
inline std::optional<std::vector<std::size_t>> first_unmatched(const GroupTuple& t,
                                                              const std::vector<std::size_t>& subset,
                                                              std::size_t s, SearchMode mode) {
  std::vector<std::vector<std::size_t>> choices;
  std::vector<GroupElement> sums;
  auto c = first_combination(s);
  do {
    std::vector<std::size_t> positions;
    positions.reserve(s);
    for (std::size_t k : c) positions.push_back(subset[k]);
    sums.push_back(subset_sum(t, positions));
    choices.push_back(std::move(positions));
  } while (next_combination(c, subset.size()));

  if (mode == SearchMode::indexed) {
    std::map<GroupElement, std::size_t> count;
    for (const auto& sum : sums) ++count[sum];
    for (std::size_t a = 0; a < sums.size(); ++a) {
      if (count[sums[a]] < 2) return choices[a];
    }
    return std::nullopt;
  }

  for (std::size_t a = 0; a < sums.size(); ++a) {
    bool matched = false;
    for (std::size_t b = 0; b < sums.size() && !matched; ++b) {
      matched = b != a && sums[a] == sums[b];
    }
    if (!matched) return choices[a];
  }
  return std::nullopt;
}

}  // namespace detail

/// Exhaustive decision of (P_{r,s}). Positions are 0-based. The failure
/// witness is the lexicographically first (r-subset, s-subset) pair, the same
/// for any worker count.
inline PropertyReport has_property(const GroupTuple& t, std::size_t r, std::size_t s,
                                   const PropertyOptions& options = {}) {
  const std::size_t q = t.size();
  check_property_arity(q, r, s);
  const Integer work = property_work(q, r, s);
  if (work > options.budget) {
    throw BudgetExceeded("property check needs " + work.str() + " comparisons, budget is " +
                         options.budget.str());
  }

  PropertyReport report{true, r, s, std::nullopt};
  const unsigned workers = std::max(1u, options.workers);

  if (workers == 1) {
    auto subset = first_combination(r);
    do {
      if (auto unmatched = detail::first_unmatched(t, subset, s, options.mode)) {
        report.holds = false;
        report.witness = PropertyWitness{subset, std::move(*unmatched)};
        return report;
      }
    } while (next_combination(subset, q));
    return report;
  }

  // Worker w takes the r-subsets whose lexicographic ordinal is w mod workers;
  // the smallest failing ordinal wins.
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  std::vector<std::optional<PropertyWitness>> found(workers);
  std::vector<std::uint64_t> found_at(workers, kNone);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        auto subset = first_combination(r);
        std::uint64_t ordinal = 0;
        do {
          if (ordinal > best.load(std::memory_order_relaxed)) return;
          if (ordinal % workers == w) {
            if (auto unmatched = detail::first_unmatched(t, subset, s, options.mode)) {
              found[w] = PropertyWitness{subset, std::move(*unmatched)};
              found_at[w] = ordinal;
              std::uint64_t current = best.load();
              while (ordinal < current && !best.compare_exchange_weak(current, ordinal)) {
              }
              return;
            }
          }
          ++ordinal;
        } while (next_combination(subset, q));
      });
    }
  }
  for (unsigned w = 0; w < workers; ++w) {
    if (found_at[w] != kNone && found_at[w] == best.load()) {
      report.holds = false;
      report.witness = std::move(found[w]);
    }
  }
  return report;
}

/// Re-runs the inner search for a reported failure: true iff `w.indices` is an
/// s-subset of the r-subset `w.subset` with no distinct equal-sum partner.
inline bool confirms_failure(const GroupTuple& t, std::size_t r, std::size_t s,
                             const PropertyWitness& w) {
  if (w.subset.size() != r || w.indices.size() != s) return false;
  if (!std::is_sorted(w.subset.begin(), w.subset.end()) ||
      std::adjacent_find(w.subset.begin(), w.subset.end()) != w.subset.end()) {
    return false;
  }
  if (!w.subset.empty() && w.subset.back() >= t.size()) return false;
  for (std::size_t i : w.indices) {
    if (std::find(w.subset.begin(), w.subset.end(), i) == w.subset.end()) return false;
  }
  std::vector<std::size_t> sorted_indices = w.indices;
  std::sort(sorted_indices.begin(), sorted_indices.end());
  if (std::adjacent_find(sorted_indices.begin(), sorted_indices.end()) != sorted_indices.end()) {
    return false;
  }
  const GroupElement target = subset_sum(t, sorted_indices);
  auto c = first_combination(s);
  do {
    std::vector<std::size_t> positions;
    for (std::size_t k : c) positions.push_back(w.subset[k]);
    if (positions != sorted_indices && subset_sum(t, positions) == target) return false;
  } while (next_combination(c, r));
  return true;
}

}  // namespace abtuple

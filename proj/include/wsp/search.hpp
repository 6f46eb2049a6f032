#pragma once

#include "wsp/partition.hpp"
#include "wsp/verifier.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace wsp {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

enum class DecideStatus { feasible, infeasible, budget_exhausted };

struct DecideResult
{
    DecideStatus status = DecideStatus::infeasible;
    std::optional<Partition> witness;
    std::uint64_t nodes_visited = 0;
};

/// Backtracking search for a partition of 1..n into exactly s non-empty weakly
/// sum-free subsets that also meets the requested extra conditions
/// (Condition 2, Condition 3). Integers are coloured in order 1, 2, ..., n and
/// interchangeable colours are opened in first-use order. With Condition 3,
/// colour 1 is pinned as the seed subset and only the others are symmetric.
/// One node is one placement of an integer into a subset.
DecideResult decide(unsigned s, std::uint64_t n, ConditionSet constraints,
    std::uint64_t budget = default_node_budget);

enum class SearchMode { exact, capped };

struct SearchResult
{
    unsigned s = 0;
    SearchMode mode = SearchMode::capped;
    std::uint64_t best_n = 0;
    std::optional<Partition> witness;
    /// True iff best_n + 1 was shown infeasible.
    bool exhausted = false;
    std::uint64_t nodes_visited = 0;
};

/// Largest n (up to cap) admitting a weak Schur partition into s subsets,
/// found by calling decide for n = s, s + 1, ... until one is infeasible.
/// The node budget is shared across all calls.
SearchResult compute_ws(unsigned s, std::uint64_t cap, std::uint64_t budget = default_node_budget);

struct SeedSearchResult
{
    std::vector<Partition> seeds;
    /// True iff the whole search space was explored (not cut by limit or budget).
    bool complete = false;
    bool budget_exhausted = false;
    std::uint64_t nodes_visited = 0;
};

enum class SeedPredicate {
    /// validate_seed reports nothing: the chain can be continued indefinitely.
    iterable,
    /// Conditions 1-3 only.
    conditions_only,
};

/// Up to `limit` canonical partitions p(s; n) satisfying `predicate`, with
/// subset 1 pinned and the other subsets in first-use order.
SeedSearchResult find_seeds(unsigned s, std::uint64_t n, std::size_t limit,
    std::uint64_t budget = default_node_budget, SeedPredicate predicate = SeedPredicate::iterable);

} // namespace wsp

#pragma once

#include "wsp/partition.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wsp {

/// Which checks verify() runs. Well-formedness is always checked first.
class ConditionSet
{
public:
    enum Flag : unsigned {
        well_formed = 1U << 0,
        weak_sum_free = 1U << 1,  // Condition 1
        no_double = 1U << 2,      // Condition 2
        seed_extension = 1U << 3, // Condition 3
    };

    /// Throws std::invalid_argument if no flag is set.
    explicit ConditionSet(unsigned flags);

    static ConditionSet all() { return ConditionSet(well_formed | weak_sum_free | no_double | seed_extension); }
    static ConditionSet weak_only() { return ConditionSet(well_formed | weak_sum_free); }
    /// Parses "all" or a comma-separated list drawn from 1, 2, 3.
    static ConditionSet parse(const std::string& spec);

    [[nodiscard]] bool has(Flag f) const { return (flags_ & f) != 0; }
    [[nodiscard]] unsigned flags() const { return flags_; }

    friend bool operator==(ConditionSet, ConditionSet) = default;

private:
    unsigned flags_;
};

std::string condition_label(ConditionSet::Flag f);

struct VerifyOptions
{
    /// Stop each check at its first violation. Emptiness of the report is unchanged.
    bool first_only = false;
    /// Worker threads for per-subset checks; 0 means hardware concurrency.
    unsigned threads = 1;
};

/// Every triple a < b, a + b = c with a, b, c in s, ordered by (c, a).
/// Word-parallel: for each a, S shifted down by a is intersected with S.
std::vector<Violation> weak_violations(const IntSet& s, bool first_only = false);

/// Reference implementation of weak_violations by direct pair enumeration.
std::vector<Violation> weak_violations_naive(const IntSet& s);

/// Every pair a <= b with a + b in s, as (a, b, a + b) ordered by (c, a).
std::vector<Violation> strong_violations(const IntSet& s, bool first_only = false);

/// Pairs (a, 2a) with a > 4 inside one subset.
std::vector<Violation> condition2_violations(const Partition& p, bool first_only = false);

/// Subset 1 extended by n + 2 must stay weakly sum-free, and n must not be in subset 1.
std::vector<Violation> condition3_violations(const Partition& p, bool first_only = false);

ViolationReport verify(const Partition& p, ConditionSet which, const VerifyOptions& options = {});
ViolationReport verify(const RawPartition& raw, ConditionSet which, const VerifyOptions& options = {});

} // namespace wsp

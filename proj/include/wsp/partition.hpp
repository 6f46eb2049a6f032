#pragma once

#include "wsp/int_set.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wsp {

enum class ViolationKind : std::uint8_t {
    weak_sum,              // a + b = c, a < b, all in one subset
    double_element,        // a and 2a in one subset with a > 4
    not_a_partition,       // duplicate, missing or out-of-range integer
    empty_subset,
    condition3_sumfree,    // a + b = n + 2 with a < b in subset 1
    condition3_membership, // n is in subset 1
    strong_sum,            // a + b = c with a <= b
    seed_advisory,         // 5 or 6 in subset 1: the chain stops after one or two steps
    lookahead_double,      // (n + 2) / 2 > 4 in subset 1: the next step breaks Conditions 1 and 2
    lookahead_extension,   // the next step puts a + b = n' + 2 into subset 1
};

std::string_view to_string(ViolationKind kind);
std::optional<ViolationKind> violation_kind_from_string(std::string_view name);

struct Violation
{
    ViolationKind kind{};
    /// 1-based subset index, if the violation belongs to one subset.
    std::optional<std::size_t> subset_index;
    std::array<std::uint64_t, 3> witness{};
    std::uint8_t arity = 0;

    static Violation triple(ViolationKind kind, std::optional<std::size_t> subset, std::uint64_t a,
        std::uint64_t b, std::uint64_t c)
    {
        return {kind, subset, {a, b, c}, 3};
    }

    [[nodiscard]] std::span<const std::uint64_t> values() const { return {witness.data(), arity}; }

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Reporting order: (subset_index, c, a), with unindexed violations first.
bool report_order(const Violation& x, const Violation& y);

struct ViolationReport
{
    std::vector<Violation> violations;
    /// Labels of the checks that actually ran, e.g. "well-formed", "condition1".
    std::vector<std::string> checked_conditions;
    /// Checks that were requested but not run because the input was malformed.
    std::vector<std::string> skipped_conditions;

    [[nodiscard]] bool empty() const { return violations.empty(); }
    /// True iff there is a violation other than a seed advisory.
    [[nodiscard]] bool has_blocking() const;
    [[nodiscard]] bool has_kind(ViolationKind kind) const;
};

/// Unchecked partition data as read from a file or built by hand: a claimed
/// order and an ordered list of subsets (subset 1 first).
struct RawPartition
{
    std::uint64_t n = 0;
    std::vector<std::vector<std::uint64_t>> subsets;
};

/// Well-formedness violations (duplicates, gaps, out-of-range values, empty
/// subsets) of raw data. Empty result means the data forms a partition of 1..n.
std::vector<Violation> well_formed_violations(const RawPartition& raw);

class PartitionError : public std::invalid_argument
{
public:
    PartitionError(const std::string& what, std::vector<Violation> violations)
        : std::invalid_argument(what), violations_(std::move(violations))
    {
    }
    [[nodiscard]] const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// A partition of {1, ..., n} into s non-empty, pairwise disjoint subsets.
/// Subset order is significant: subset 1 carries the seed-extension property.
class Partition
{
public:
    /// Throws PartitionError unless the subsets partition 1..n.
    Partition(std::uint64_t n, std::vector<IntSet> subsets);
    explicit Partition(const RawPartition& raw);

    [[nodiscard]] std::size_t s() const { return subsets_.size(); }
    [[nodiscard]] Element n() const { return n_; }
    /// 1-based.
    [[nodiscard]] const IntSet& subset(std::size_t index) const { return subsets_.at(index - 1); }
    [[nodiscard]] const std::vector<IntSet>& subsets() const { return subsets_; }
    /// 1-based index of the subset containing v, or 0.
    [[nodiscard]] std::size_t subset_of(Element v) const;

    [[nodiscard]] RawPartition to_raw() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Element n_ = 0;
    std::vector<IntSet> subsets_;
};

/// Record of one application of the construction step to a partition of order m.
struct ConstructionTrace
{
    Element input_order = 0;
    Element output_order = 0;
    /// m + 2 and 2m + 2, both placed in subset 1.
    std::array<Element, 2> injected{};
    /// reflected_per_subset[i - 1] lists 3m + 4 - a for each a > 4 in subset i, ascending.
    std::vector<std::vector<Element>> reflected_per_subset;
    IntSet new_subset;
};

} // namespace wsp

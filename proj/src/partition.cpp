#include "wsp/partition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>

namespace wsp {

namespace {

constexpr std::array<std::pair<ViolationKind, std::string_view>, 10> kind_names{{
    {ViolationKind::weak_sum, "weak-sum"},
    {ViolationKind::double_element, "double-element"},
    {ViolationKind::not_a_partition, "not-a-partition"},
    {ViolationKind::empty_subset, "empty-subset"},
    {ViolationKind::condition3_sumfree, "condition3-sumfree"},
    {ViolationKind::condition3_membership, "condition3-membership"},
    {ViolationKind::strong_sum, "strong-sum"},
    {ViolationKind::seed_advisory, "seed-advisory"},
    {ViolationKind::lookahead_double, "lookahead-double"},
    {ViolationKind::lookahead_extension, "lookahead-extension"},
}};

Violation single(ViolationKind kind, std::optional<std::size_t> subset, std::uint64_t v)
{
    return {kind, subset, {v, 0, 0}, 1};
}

} // namespace

std::string_view to_string(ViolationKind kind)
{
    for (const auto& [k, name] : kind_names)
        if (k == kind)
            return name;
    return "unknown";
}

std::optional<ViolationKind> violation_kind_from_string(std::string_view name)
{
    for (const auto& [k, n] : kind_names)
        if (n == name)
            return k;
    return std::nullopt;
}

bool report_order(const Violation& x, const Violation& y)
{
    // The sum is the last witness value; for shorter witnesses fall back to the first.
    auto key = [](const Violation& v) {
        const std::uint64_t c = v.arity == 0 ? 0 : v.witness[v.arity - 1];
        const std::size_t idx = v.subset_index.value_or(0);
        return std::tuple(v.subset_index.has_value(), idx, c, v.witness[0], v.kind, v.witness[1]);
    };
    return key(x) < key(y);
}

bool ViolationReport::has_blocking() const
{
    return std::any_of(violations.begin(), violations.end(),
        [](const Violation& v) { return v.kind != ViolationKind::seed_advisory; });
}

bool ViolationReport::has_kind(ViolationKind kind) const
{
    return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

std::vector<Violation> well_formed_violations(const RawPartition& raw)
{
    std::vector<Violation> out;
    if (raw.subsets.empty()) {
        out.push_back({ViolationKind::not_a_partition, std::nullopt, {}, 0});
        return out;
    }
    if (raw.n == 0 || raw.n > std::numeric_limits<Element>::max()) {
        out.push_back(single(ViolationKind::not_a_partition, std::nullopt, raw.n));
        return out;
    }
    std::vector<bool> seen(raw.n + 1, false);
    for (std::size_t i = 0; i < raw.subsets.size(); ++i) {
        const std::size_t index = i + 1;
        if (raw.subsets[i].empty())
            out.push_back({ViolationKind::empty_subset, index, {}, 0});
        for (std::uint64_t v : raw.subsets[i]) {
            if (v == 0 || v > raw.n)
                out.push_back(single(ViolationKind::not_a_partition, index, v));
            else if (seen[v])
                out.push_back(single(ViolationKind::not_a_partition, index, v));
            else
                seen[v] = true;
        }
    }
    for (std::uint64_t v = 1; v <= raw.n; ++v)
        if (!seen[v])
            out.push_back(single(ViolationKind::not_a_partition, std::nullopt, v));
    std::sort(out.begin(), out.end(), report_order);
    return out;
}

Partition::Partition(std::uint64_t n, std::vector<IntSet> subsets)
{
    auto fail = [&]() {
        // Slow path: explain what is wrong.
        throw PartitionError("not a partition of 1..n into non-empty subsets",
            well_formed_violations(RawPartition{n, [&] {
                std::vector<std::vector<std::uint64_t>> rows;
                for (const auto& s : subsets)
                    rows.emplace_back(s.begin(), s.end());
                return rows;
            }()}));
    };
    if (n == 0 || n > std::numeric_limits<Element>::max() || subsets.empty())
        fail();
    // Every subset non-empty and inside 1..n, sizes summing to n, and a union
    // of n distinct members: together these force a partition of 1..n.
    std::size_t total = 0;
    std::vector<IntSet::Word> uni(n / IntSet::word_bits + 2, 0);
    for (const auto& s : subsets) {
        if (s.empty() || s.max() > n)
            fail();
        total += s.size();
        const auto words = s.words();
        for (std::size_t w = 0; w < words.size() && w < uni.size(); ++w)
            uni[w] |= words[w];
    }
    std::size_t covered = 0;
    for (auto w : uni)
        covered += static_cast<std::size_t>(std::popcount(w));
    if (total != n || covered != n)
        fail();
    n_ = static_cast<Element>(n);
    subsets_ = std::move(subsets);
}

Partition::Partition(const RawPartition& raw)
{
    if (auto v = well_formed_violations(raw); !v.empty())
        throw PartitionError("not a partition of 1..n into non-empty subsets", std::move(v));
    std::vector<IntSet> subsets;
    subsets.reserve(raw.subsets.size());
    for (const auto& row : raw.subsets) {
        IntSet s;
        for (auto v : row)
            s.insert(static_cast<Element>(v));
        subsets.push_back(std::move(s));
    }
    *this = Partition(raw.n, std::move(subsets));
}

std::size_t Partition::subset_of(Element v) const
{
    for (std::size_t i = 0; i < subsets_.size(); ++i)
        if (subsets_[i].contains(v))
            return i + 1;
    return 0;
}

RawPartition Partition::to_raw() const
{
    RawPartition raw{n_, {}};
    for (const auto& s : subsets_)
        raw.subsets.emplace_back(s.begin(), s.end());
    return raw;
}

} // namespace wsp

#include "wsp/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wsp {

namespace {

using Word = IntSet::Word;
constexpr std::size_t W = IntSet::word_bits;

/// Emits (a, b, a + b) for every b >= min_b with b and a + b both in s.
/// Returns false once first_only is set and something was emitted.
bool shifted_intersection(const IntSet& s, Element a, std::uint64_t min_b, ViolationKind kind,
    std::vector<Violation>& out, bool first_only)
{
    const auto words = s.words();
    const std::uint64_t hi = s.max() - a;
    if (min_b > hi)
        return true;
    const std::size_t base = a / W;
    const unsigned shift = a % W;
    const std::size_t first = min_b / W;
    const std::size_t last = hi / W;
    for (std::size_t w = first; w <= last; ++w) {
        Word shifted = words[w + base] >> shift;
        if (shift != 0)
            shifted |= words[w + base + 1] << (W - shift);
        Word x = words[w] & shifted;
        if (w == first)
            x &= ~Word{0} << (min_b % W);
        while (x != 0) {
            const std::uint64_t b = w * W + static_cast<unsigned>(std::countr_zero(x));
            out.push_back(Violation::triple(kind, std::nullopt, a, b, a + b));
            if (first_only)
                return false;
            x &= x - 1;
        }
    }
    return true;
}

void sort_by_sum(std::vector<Violation>& v)
{
    std::sort(v.begin(), v.end(), report_order);
}

std::vector<Violation> with_index(std::vector<Violation> v, std::size_t index)
{
    for (auto& x : v)
        x.subset_index = index;
    return v;
}

/// Runs job(i) for i in [0, count) on up to `threads` workers.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job job)
{
    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                job(i);
        });
}

} // namespace

ConditionSet::ConditionSet(unsigned flags) : flags_(flags)
{
    if ((flags_ & (well_formed | weak_sum_free | no_double | seed_extension)) == 0)
        throw std::invalid_argument("at least one condition must be selected");
}

ConditionSet ConditionSet::parse(const std::string& spec)
{
    if (spec == "all")
        return all();
    unsigned flags = well_formed;
    std::stringstream in(spec);
    std::string item;
    bool any = false;
    while (std::getline(in, item, ',')) {
        if (item == "1")
            flags |= weak_sum_free;
        else if (item == "2")
            flags |= no_double;
        else if (item == "3")
            flags |= seed_extension;
        else
            throw std::invalid_argument("unknown condition '" + item + "' (expected 1, 2, 3 or all)");
        any = true;
    }
    if (!any)
        throw std::invalid_argument("empty condition list");
    return ConditionSet(flags);
}

std::string condition_label(ConditionSet::Flag f)
{
    switch (f) {
    case ConditionSet::well_formed:
        return "well-formed";
    case ConditionSet::weak_sum_free:
        return "condition1";
    case ConditionSet::no_double:
        return "condition2";
    case ConditionSet::seed_extension:
        return "condition3";
    }
    return "unknown";
}

std::vector<Violation> weak_violations(const IntSet& s, bool first_only)
{
    std::vector<Violation> out;
    for (Element a : s) {
        if (std::uint64_t{a} + a + 1 > s.max())
            break;
        if (!shifted_intersection(s, a, std::uint64_t{a} + 1, ViolationKind::weak_sum, out, first_only))
            break;
    }
    sort_by_sum(out);
    return out;
}

std::vector<Violation> weak_violations_naive(const IntSet& s)
{
    const auto v = s.to_vector();
    std::vector<Violation> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const std::uint64_t c = std::uint64_t{v[i]} + v[j];
            if (std::binary_search(v.begin(), v.end(), c))
                out.push_back(Violation::triple(ViolationKind::weak_sum, std::nullopt, v[i], v[j], c));
        }
    sort_by_sum(out);
    return out;
}

std::vector<Violation> strong_violations(const IntSet& s, bool first_only)
{
    std::vector<Violation> out;
    for (Element a : s) {
        if (std::uint64_t{a} + a > s.max())
            break;
        if (!shifted_intersection(s, a, a, ViolationKind::strong_sum, out, first_only))
            break;
    }
    sort_by_sum(out);
    return out;
}

std::vector<Violation> condition2_violations(const Partition& p, bool first_only)
{
    std::vector<Violation> out;
    for (std::size_t i = 1; i <= p.s(); ++i) {
        const auto& s = p.subset(i);
        for (Element a : s) {
            if (a <= 4)
                continue;
            if (std::uint64_t{a} * 2 > s.max())
                break;
            if (s.contains(std::uint64_t{a} * 2)) {
                out.push_back({ViolationKind::double_element, i, {a, std::uint64_t{a} * 2, 0}, 2});
                if (first_only)
                    return out;
            }
        }
    }
    return out;
}

std::vector<Violation> condition3_violations(const Partition& p, bool first_only)
{
    std::vector<Violation> out;
    const auto& s1 = p.subset(1);
    const std::uint64_t n = p.n();
    if (s1.contains(n)) {
        out.push_back({ViolationKind::condition3_membership, 1, {n, 0, 0}, 1});
        if (first_only)
            return out;
    }
    // n + 2 exceeds every member, so it can only appear as the sum.
    const std::uint64_t target = n + 2;
    for (Element a : s1) {
        if (2 * std::uint64_t{a} >= target)
            break;
        if (s1.contains(target - a)) {
            out.push_back(Violation::triple(ViolationKind::condition3_sumfree, 1, a, target - a, target));
            if (first_only)
                break;
        }
    }
    return out;
}

ViolationReport verify(const RawPartition& raw, ConditionSet which, const VerifyOptions& options)
{
    auto structural = well_formed_violations(raw);
    if (structural.empty())
        return verify(Partition(raw), which, options);

    ViolationReport report;
    report.checked_conditions.push_back(condition_label(ConditionSet::well_formed));
    if (options.first_only)
        structural.resize(1);
    report.violations = std::move(structural);
    for (auto f : {ConditionSet::weak_sum_free, ConditionSet::no_double, ConditionSet::seed_extension})
        if (which.has(f))
            report.skipped_conditions.push_back(condition_label(f));
    return report;
}

ViolationReport verify(const Partition& p, ConditionSet which, const VerifyOptions& options)
{
    ViolationReport report;
    report.checked_conditions.push_back(condition_label(ConditionSet::well_formed));
    auto structural = well_formed_violations(p.to_raw());
    if (!structural.empty()) {
        report.violations = std::move(structural);
        for (auto f : {ConditionSet::weak_sum_free, ConditionSet::no_double, ConditionSet::seed_extension})
            if (which.has(f))
                report.skipped_conditions.push_back(condition_label(f));
        return report;
    }

    auto& out = report.violations;
    if (which.has(ConditionSet::weak_sum_free)) {
        report.checked_conditions.push_back(condition_label(ConditionSet::weak_sum_free));
        std::vector<std::vector<Violation>> per_subset(p.s());
        parallel_for(p.s(), options.threads, [&](std::size_t i) {
            per_subset[i] = with_index(weak_violations(p.subsets()[i], options.first_only), i + 1);
        });
        for (auto& v : per_subset)
            out.insert(out.end(), v.begin(), v.end());
    }
    if (which.has(ConditionSet::no_double)) {
        report.checked_conditions.push_back(condition_label(ConditionSet::no_double));
        auto v = condition2_violations(p, options.first_only);
        out.insert(out.end(), v.begin(), v.end());
    }
    if (which.has(ConditionSet::seed_extension)) {
        report.checked_conditions.push_back(condition_label(ConditionSet::seed_extension));
        auto v = condition3_violations(p, options.first_only);
        out.insert(out.end(), v.begin(), v.end());
    }
    std::sort(out.begin(), out.end(), report_order);
    return report;
}

} // namespace wsp

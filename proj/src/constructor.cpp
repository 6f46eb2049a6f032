#include "wsp/constructor.hpp"

#include <algorithm>
#include <limits>

namespace wsp {

namespace {

constexpr std::array<LiteratureValue, 5> literature{{
    {6, 572, "weak"},
    {6, 642, "weak"},
    {6, 536, "strong"},
    {7, 2146, "weak"},
    {7, 1680, "strong"},
}};

std::string first_failure(const ViolationReport& report)
{
    for (const auto& v : report.violations) {
        switch (v.kind) {
        case ViolationKind::weak_sum:
            return "condition 1 (weak sum-freeness)";
        case ViolationKind::double_element:
            return "condition 2 (no a, 2a with a > 4)";
        case ViolationKind::condition3_sumfree:
        case ViolationKind::condition3_membership:
            return "condition 3 (seed extension)";
        case ViolationKind::seed_advisory:
            continue;
        default:
            return "well-formedness";
        }
    }
    return "none";
}

void require_seed(const Partition& p, const VerifyOptions& options, std::size_t step)
{
    auto report = verify(p, ConditionSet::all(), options);
    if (report.has_blocking()) {
        auto what = "partition of order " + std::to_string(p.n()) + " fails " + first_failure(report);
        if (step > 0)
            what = "step " + std::to_string(step) + ": " + what;
        throw PreconditionError(what, std::move(report), step);
    }
}

} // namespace

Partition base_partition_p3()
{
    IntSet third;
    third.insert_range(9, 17);
    return Partition(21, {IntSet{1, 2, 4, 8, 18}, IntSet{3, 5, 6, 7, 19, 20, 21}, std::move(third)});
}

Step construct_step_unchecked(const Partition& p)
{
    const std::uint64_t m = p.n();
    if (3 * m + 4 > std::numeric_limits<Element>::max())
        throw std::overflow_error("order " + std::to_string(3 * m - 1) + " exceeds the supported element range");
    const auto m32 = static_cast<Element>(m);
    const Element mirror = 3 * m32 + 4;

    ConstructionTrace trace;
    trace.input_order = m32;
    trace.output_order = 3 * m32 - 1;
    trace.injected = {m32 + 2, 2 * m32 + 2};

    std::vector<IntSet> subsets;
    subsets.reserve(p.s() + 1);
    for (std::size_t i = 1; i <= p.s(); ++i) {
        IntSet grown = p.subset(i);
        std::vector<Element> reflected;
        for (Element a : p.subset(i))
            if (a > 4)
                reflected.push_back(mirror - a);
        std::reverse(reflected.begin(), reflected.end());
        for (Element r : reflected)
            grown.insert(r);
        if (i == 1) {
            grown.insert(trace.injected[0]);
            grown.insert(trace.injected[1]);
        }
        trace.reflected_per_subset.push_back(std::move(reflected));
        subsets.push_back(std::move(grown));
    }

    trace.new_subset.insert(m32 + 1);
    trace.new_subset.insert_range(m32 + 3, 2 * m32 + 1);
    trace.new_subset.insert(2 * m32 + 3);
    subsets.push_back(trace.new_subset);

    return {Partition(trace.output_order, std::move(subsets)), std::move(trace)};
}

Step construct_step(const Partition& p, const VerifyOptions& options)
{
    require_seed(p, options, 0);
    return construct_step_unchecked(p);
}

std::vector<Step> iterate(const Partition& seed, std::size_t steps, const VerifyOptions& options)
{
    std::vector<Step> chain;
    if (steps == 0)
        return chain;
    chain.reserve(steps);
    require_seed(seed, options, 0);
    const Partition* current = &seed;
    for (std::size_t k = 1; k <= steps; ++k) {
        chain.push_back(construct_step_unchecked(*current));
        current = &chain.back().partition;
        require_seed(*current, options, k);
    }
    return chain;
}

std::vector<Violation> lookahead_violations(const Partition& p)
{
    std::vector<Violation> out;
    const auto& s1 = p.subset(1);
    const std::uint64_t m = p.n();
    if (m % 2 == 0 && (m + 2) / 2 > 4 && s1.contains((m + 2) / 2))
        out.push_back({ViolationKind::lookahead_double, 1, {(m + 2) / 2, m + 2, 0}, 2});
    for (Element b : s1)
        if (b > 4 && s1.contains(b - 3))
            out.push_back(Violation::triple(ViolationKind::lookahead_extension, 1, b - 3, 3 * m + 4 - b, 3 * m + 1));
    if (m > 1 && s1.contains(m - 1))
        out.push_back(Violation::triple(ViolationKind::lookahead_extension, 1, m - 1, 2 * m + 2, 3 * m + 1));
    std::sort(out.begin(), out.end(), report_order);
    return out;
}

ViolationReport validate_seed(const Partition& p, const VerifyOptions& options)
{
    auto report = verify(p, ConditionSet::all(), options);
    auto ahead = lookahead_violations(p);
    report.violations.insert(report.violations.end(), ahead.begin(), ahead.end());
    for (Element v : {5U, 6U})
        if (p.subset(1).contains(v))
            report.violations.push_back({ViolationKind::seed_advisory, 1, {v, 0, 0}, 1});
    std::sort(report.violations.begin(), report.violations.end(), report_order);
    return report;
}

BigInt bound(unsigned s)
{
    if (s < 3)
        throw std::invalid_argument("bound is defined for s >= 3");
    BigInt m = 21;
    for (unsigned k = 3; k < s; ++k)
        m = 3 * m - 1;
    return m;
}

BigInt bound_closed_form(unsigned s)
{
    if (s < 3)
        throw std::invalid_argument("bound is defined for s >= 3");
    return (41 * boost::multiprecision::pow(BigInt(3), s - 3) + 1) / 2;
}

BoundSequence bound_table(unsigned s_max)
{
    if (s_max < 3)
        throw std::invalid_argument("table needs s_max >= 3");
    BoundSequence seq;
    seq.start_s = 3;
    BigInt m = 21;
    for (unsigned s = 3; s <= s_max; ++s) {
        seq.orders.push_back(m);
        m = 3 * m - 1;
    }
    return seq;
}

std::vector<LiteratureValue> literature_values(unsigned s)
{
    std::vector<LiteratureValue> out;
    std::copy_if(literature.begin(), literature.end(), std::back_inserter(out),
        [s](const LiteratureValue& v) { return v.s == s; });
    return out;
}

} // namespace wsp

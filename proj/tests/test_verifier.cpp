#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsp/constructor.hpp"
#include "wsp/verifier.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

using namespace wsp;

namespace {

using Triple = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

std::set<Triple> triples(const std::vector<Violation>& v)
{
    std::set<Triple> out;
    for (const auto& x : v)
        out.emplace(x.witness[0], x.witness[1], x.witness[2]);
    return out;
}

/// All pairs a <= b (or a < b) of `s` whose sum is in `s`, by plain enumeration.
std::set<Triple> brute_sums(const IntSet& s, bool allow_equal)
{
    std::set<Triple> out;
    const auto v = s.to_vector();
    for (auto a : v)
        for (auto b : v)
            if ((allow_equal ? a <= b : a < b) && s.contains(std::uint64_t{a} + b))
                out.emplace(a, b, a + b);
    return out;
}

IntSet random_set(std::mt19937& rng, Element max_value, std::size_t count)
{
    IntSet s;
    std::uniform_int_distribution<Element> value(1, max_value);
    for (std::size_t k = 0; k < count; ++k)
        s.insert(value(rng));
    return s;
}

IntSet range(Element lo, Element hi)
{
    IntSet s;
    s.insert_range(lo, hi);
    return s;
}

} // namespace

TEST_CASE("weak_violations: worked examples")
{
    const auto v = weak_violations(IntSet{1, 2, 3});
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::weak_sum);
    CHECK(triples(v) == std::set<Triple>{{1, 2, 3}});

    CHECK(weak_violations(range(9, 17)).empty());
    CHECK(weak_violations(IntSet{1, 2, 4, 8, 18, 23}).empty());
    // a + a is not a weak violation.
    CHECK(weak_violations(IntSet{2, 4}).empty());
}

TEST_CASE("weak_violations_naive agrees on the worked examples")
{
    for (const auto& s : {IntSet{1, 2, 3}, range(9, 17), IntSet{1, 2, 4, 8, 18, 23}, IntSet{}, IntSet{5}})
        CHECK(weak_violations_naive(s) == weak_violations(s));
    CHECK(weak_violations_naive(IntSet{}).empty());
    CHECK(weak_violations_naive(IntSet{5}).empty());
}

TEST_CASE("strong_violations")
{
    const auto v = strong_violations(IntSet{1, 2});
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::strong_sum);
    CHECK(triples(v) == std::set<Triple>{{1, 1, 2}});

    IntSet new_subset = range(24, 43);
    new_subset.insert(22);
    new_subset.insert(45);
    REQUIRE(brute_sums(new_subset, true).empty());
    CHECK(strong_violations(new_subset).empty());

    CHECK(strong_violations(range(9, 17)).empty());
    CHECK_FALSE(strong_violations(range(9, 18)).empty());
}

TEST_CASE("condition2_violations")
{
    CHECK(condition2_violations(base_partition_p3()).empty());

    const Partition doubled(10, {IntSet{5, 10}, IntSet{1, 2, 3, 4, 6, 7, 8, 9}});
    const auto v = condition2_violations(doubled);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::double_element);
    CHECK(v[0].subset_index == 1u);
    CHECK(v[0].values()[0] == 5);
    CHECK(v[0].values()[1] == 10);

    // a = 4 is exempt.
    const Partition four(8, {IntSet{4, 8}, IntSet{1, 2, 3, 5, 6, 7}});
    CHECK(condition2_violations(four).empty());
}

TEST_CASE("condition3_violations")
{
    CHECK(condition3_violations(base_partition_p3()).empty());

    // S_1 = {1, 2, n}: n is in S_1, and 2 + n = n + 2 breaks the extension as well.
    const auto v = condition3_violations(Partition(6, {IntSet{1, 2, 6}, IntSet{3, 4, 5}}));
    REQUIRE(v.size() == 2);
    CHECK(v[0].kind == ViolationKind::condition3_membership);
    CHECK(v[0].values()[0] == 6);
    CHECK(v[1].kind == ViolationKind::condition3_sumfree);
    CHECK(v[1].witness == std::array<std::uint64_t, 3>{2, 6, 8});

    // 3 + 5 = 8 = n + 2, n itself elsewhere.
    const auto w = condition3_violations(Partition(6, {IntSet{3, 5}, IntSet{1, 2, 4, 6}}));
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == ViolationKind::condition3_sumfree);
    CHECK(w[0].subset_index == 1u);
    CHECK(w[0].witness == std::array<std::uint64_t, 3>{3, 5, 8});

    // (n + 2) / 2 twice is allowed.
    CHECK(condition3_violations(Partition(6, {IntSet{4}, IntSet{1, 2, 3, 5, 6}})).empty());
}

TEST_CASE("verify aggregates the selected conditions")
{
    const auto p = base_partition_p3();
    const auto report = verify(p, ConditionSet::all());
    CHECK(report.empty());
    CHECK(report.checked_conditions
        == std::vector<std::string>{"well-formed", "condition1", "condition2", "condition3"});

    const auto weak = verify(p, ConditionSet::weak_only());
    CHECK(weak.checked_conditions == std::vector<std::string>{"well-formed", "condition1"});
}

TEST_CASE("verify reports weak sums with subset index in report order")
{
    std::mt19937 rng(3);
    for (int round = 0; round < 50; ++round) {
        // 1, 2, 3 together, everything else random.
        std::vector<IntSet> subsets(3);
        subsets[0] = IntSet{1, 2, 3};
        for (Element v = 4; v <= 24; ++v)
            subsets[rng() % 3].insert(v);
        if (subsets[1].empty())
            subsets[1].insert(25);
        if (subsets[2].empty())
            subsets[2].insert(subsets[1].contains(25) ? 26 : 25);
        const Element n = std::max({subsets[0].max(), subsets[1].max(), subsets[2].max()});
        const Partition p(n, subsets);
        const auto report = verify(p, ConditionSet::weak_only());
        REQUIRE(!report.empty());
        CHECK(std::is_sorted(report.violations.begin(), report.violations.end(), report_order));
        CHECK(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
            return v.subset_index == 1u && v.witness == std::array<std::uint64_t, 3>{1, 2, 3};
        }));
    }
}

TEST_CASE("verify on malformed data skips the condition checks")
{
    RawPartition raw{3, {{1, 3}, {1, 2}}};
    const auto report = verify(raw, ConditionSet::all());
    CHECK(report.checked_conditions == std::vector<std::string>{"well-formed"});
    CHECK(report.skipped_conditions == std::vector<std::string>{"condition1", "condition2", "condition3"});
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::not_a_partition);
    CHECK(report.violations[0].values()[0] == 1);

    RawPartition gappy{4, {{1}, {}, {2, 5}}};
    const auto r2 = verify(gappy, ConditionSet::weak_only());
    CHECK(r2.has_kind(ViolationKind::empty_subset));
    CHECK(r2.has_kind(ViolationKind::not_a_partition));
    // 3 and 4 missing, 5 out of range.
    CHECK(std::count_if(r2.violations.begin(), r2.violations.end(),
              [](const Violation& v) { return v.kind == ViolationKind::not_a_partition; })
        == 3);

    RawPartition good{3, {{1, 2}, {3}}};
    CHECK(verify(good, ConditionSet::all()).checked_conditions.size() == 4);
}

TEST_CASE("Partition rejects non-partitions")
{
    CHECK_THROWS_AS(Partition(3, {IntSet{1, 3}, IntSet{1, 2}}), PartitionError);
    CHECK_THROWS_AS(Partition(4, {IntSet{1, 3}, IntSet{2}}), PartitionError);
    CHECK_THROWS_AS(Partition(2, {IntSet{1, 2}, IntSet{}}), PartitionError);
    CHECK_THROWS_AS(Partition(2, {IntSet{1, 2, 3}}), PartitionError);
    CHECK_THROWS_AS(Partition(RawPartition{2, {{1, 1, 2}}}), PartitionError);
    try {
        Partition(4, {IntSet{1, 3}, IntSet{2}});
    } catch (const PartitionError& e) {
        REQUIRE(e.violations().size() == 1);
        CHECK(e.violations()[0].values()[0] == 4);
    }
}

TEST_CASE("ConditionSet parsing")
{
    CHECK(ConditionSet::parse("all") == ConditionSet::all());
    CHECK(ConditionSet::parse("1") == ConditionSet::weak_only());
    CHECK(ConditionSet::parse("1,2,3") == ConditionSet::all());
    CHECK(ConditionSet::parse("3").has(ConditionSet::seed_extension));
    CHECK_THROWS_AS(ConditionSet::parse("4"), std::invalid_argument);
    CHECK_THROWS_AS(ConditionSet::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(ConditionSet(0), std::invalid_argument);
}

TEST_CASE("property: fast and naive weak enumerators agree")
{
    std::mt19937 rng(2024);
    for (int round = 0; round < 2000; ++round) {
        const Element max_value = 1 + rng() % 2000;
        const std::size_t count = rng() % 160;
        const auto s = random_set(rng, max_value, count);
        const auto fast = weak_violations(s);
        REQUIRE(fast == weak_violations_naive(s));
        for (const auto& v : fast) {
            CHECK(v.values()[0] + v.values()[1] == v.values()[2]);
            CHECK(v.values()[0] < v.values()[1]);
            CHECK(v.values()[1] < v.values()[2]);
        }
    }
}

TEST_CASE("property: strong violations contain weak violations and match brute force")
{
    std::mt19937 rng(99);
    for (int round = 0; round < 500; ++round) {
        const auto s = random_set(rng, 1 + rng() % 600, rng() % 80);
        const auto weak = triples(weak_violations(s));
        const auto strong = triples(strong_violations(s));
        CHECK(std::includes(strong.begin(), strong.end(), weak.begin(), weak.end()));
        CHECK(strong == brute_sums(s, true));
        CHECK(weak == brute_sums(s, false));
    }
}

TEST_CASE("property: monotone under inclusion")
{
    std::mt19937 rng(5);
    for (int round = 0; round < 500; ++round) {
        const auto small = random_set(rng, 500, rng() % 60);
        IntSet big = small;
        for (int k = 0; k < 20; ++k)
            big.insert(1 + rng() % 500);
        const auto a = triples(weak_violations(small));
        const auto b = triples(weak_violations(big));
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("property: first_only keeps emptiness")
{
    std::mt19937 rng(17);
    for (int round = 0; round < 500; ++round) {
        const auto s = random_set(rng, 1 + rng() % 300, rng() % 25);
        const auto all = weak_violations(s);
        const auto first = weak_violations(s, true);
        CHECK(all.empty() == first.empty());
        CHECK(first.size() <= 1);
        CHECK(strong_violations(s).empty() == strong_violations(s, true).empty());
    }
}

TEST_CASE("threaded verify matches single-threaded")
{
    const auto chain = iterate(base_partition_p3(), 3);
    const auto& p = chain.back().partition;
    std::vector<IntSet> broken = p.subsets();
    // Move 3 next to 1 and 2.
    broken[1] = [&] {
        IntSet t;
        for (auto v : p.subset(2))
            if (v != 3)
                t.insert(v);
        return t;
    }();
    broken[0].insert(3);
    const Partition q(p.n(), broken);
    const auto one = verify(q, ConditionSet::all(), {false, 1});
    const auto four = verify(q, ConditionSet::all(), {false, 4});
    CHECK(!one.empty());
    CHECK(one.violations == four.violations);
    CHECK(verify(q, ConditionSet::all(), {true, 1}).empty() == false);
}

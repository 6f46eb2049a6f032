#include "wsp/search.hpp"

#include "wsp/constructor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wsp {

namespace {

struct Rules
{
    bool no_double = false;
    bool seed_extension = false;
    bool lookahead = false; // validate_seed's extra checks on subset 1
};

/// Depth-first colouring of 1..n. `on_solution` returns false to stop.
class Colourer
{
public:
    Colourer(unsigned s, std::uint64_t n, Rules rules, std::uint64_t budget)
        : s_(s), n_(n), rules_(rules), budget_(budget), colour_(n + 1, -1), members_(s),
          sums_(s, std::vector<std::uint32_t>(n + 1, 0)), fixed_(rules.seed_extension ? 1 : 0)
    {
    }

    /// Returns false if stopped early (by the callback or the budget).
    bool run(const std::function<bool(const Partition&)>& on_solution)
    {
        on_solution_ = &on_solution;
        if (n_ < s_)
            return true;
        return place(1, 0);
    }

    [[nodiscard]] bool out_of_budget() const { return out_of_budget_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    [[nodiscard]] bool allowed(std::uint64_t v, unsigned c) const
    {
        if (sums_[c][v] != 0)
            return false;
        if (rules_.no_double && v % 2 == 0 && v / 2 > 4 && colour_[v / 2] == static_cast<int>(c))
            return false;
        if (c == 0 && rules_.seed_extension) {
            if (v == n_)
                return false;
            const std::uint64_t partner = n_ + 2 - v;
            if (partner < v && colour_[partner] == 0)
                return false;
        }
        if (c == 0 && rules_.lookahead) {
            if (v == 5 || v == 6 || v == n_ - 1)
                return false;
            if (n_ % 2 == 0 && (n_ + 2) / 2 > 4 && v == (n_ + 2) / 2)
                return false;
            if (v > 4 && colour_[v - 3] == 0)
                return false;
        }
        return true;
    }

    void assign(std::uint64_t v, unsigned c)
    {
        for (auto u : members_[c])
            if (u + v <= n_)
                ++sums_[c][u + v];
        members_[c].push_back(v);
        colour_[v] = static_cast<int>(c);
    }

    void unassign(std::uint64_t v, unsigned c)
    {
        members_[c].pop_back();
        for (auto u : members_[c])
            if (u + v <= n_)
                --sums_[c][u + v];
        colour_[v] = -1;
    }

    Partition snapshot() const
    {
        std::vector<IntSet> subsets(s_);
        for (unsigned c = 0; c < s_; ++c)
            for (auto v : members_[c])
                subsets[c].insert(static_cast<Element>(v));
        return Partition(n_, std::move(subsets));
    }

    /// Colours v given `opened` free colours in use. Returns false to stop.
    bool place(std::uint64_t v, unsigned opened)
    {
        if (v > n_) {
            for (const auto& m : members_)
                if (m.empty())
                    return true;
            return (*on_solution_)(snapshot());
        }
        const std::uint64_t remaining = n_ - v + 1;
        const unsigned limit = std::min(s_, fixed_ + opened + 1);
        for (unsigned c = 0; c < limit; ++c) {
            if (!allowed(v, c))
                continue;
            const unsigned next_opened = (c >= fixed_ + opened) ? opened + 1 : opened;
            // Every subset must end up non-empty.
            unsigned empty_after = s_ - fixed_ - next_opened;
            for (unsigned f = 0; f < fixed_; ++f)
                if (members_[f].empty() && f != c)
                    ++empty_after;
            if (empty_after > remaining - 1)
                continue;
            if (nodes_ >= budget_) {
                out_of_budget_ = true;
                return false;
            }
            ++nodes_;
            assign(v, c);
            const bool go_on = place(v + 1, next_opened);
            unassign(v, c);
            if (!go_on)
                return false;
        }
        return true;
    }

    unsigned s_;
    std::uint64_t n_;
    Rules rules_;
    std::uint64_t budget_;
    std::vector<int> colour_;
    std::vector<std::vector<std::uint64_t>> members_;
    std::vector<std::vector<std::uint32_t>> sums_;
    unsigned fixed_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    const std::function<bool(const Partition&)>* on_solution_ = nullptr;
};

void check_args(unsigned s, std::uint64_t n)
{
    if (s == 0)
        throw std::invalid_argument("subset count must be positive");
    if (n == 0)
        throw std::invalid_argument("order must be positive");
}

} // namespace

DecideResult decide(unsigned s, std::uint64_t n, ConditionSet constraints, std::uint64_t budget)
{
    check_args(s, n);
    Rules rules{constraints.has(ConditionSet::no_double), constraints.has(ConditionSet::seed_extension), false};
    Colourer search(s, n, rules, budget);
    DecideResult result;
    search.run([&](const Partition& p) {
        result.witness = p;
        return false;
    });
    result.nodes_visited = search.nodes();
    if (result.witness)
        result.status = DecideStatus::feasible;
    else if (search.out_of_budget())
        result.status = DecideStatus::budget_exhausted;
    else
        result.status = DecideStatus::infeasible;
    return result;
}

SearchResult compute_ws(unsigned s, std::uint64_t cap, std::uint64_t budget)
{
    check_args(s, 1);
    SearchResult result;
    result.s = s;
    for (std::uint64_t n = s;; ++n) {
        if (n > cap) {
            result.mode = SearchMode::capped;
            return result;
        }
        const std::uint64_t left = budget - result.nodes_visited;
        auto r = decide(s, n, ConditionSet::weak_only(), left);
        result.nodes_visited += r.nodes_visited;
        switch (r.status) {
        case DecideStatus::feasible:
            result.best_n = n;
            result.witness = std::move(r.witness);
            break;
        case DecideStatus::infeasible:
            result.mode = SearchMode::exact;
            result.exhausted = true;
            return result;
        case DecideStatus::budget_exhausted:
            result.mode = SearchMode::capped;
            return result;
        }
    }
}

SeedSearchResult find_seeds(unsigned s, std::uint64_t n, std::size_t limit, std::uint64_t budget,
    SeedPredicate predicate)
{
    check_args(s, n);
    SeedSearchResult result;
    if (limit == 0)
        return result;
    const bool iterable = predicate == SeedPredicate::iterable;
    Colourer search(s, n, Rules{true, true, iterable}, budget);
    const bool finished = search.run([&](const Partition& p) {
        // The verifier is an independent implementation of the same rules.
        const bool accepted = iterable ? validate_seed(p).empty() : verify(p, ConditionSet::all()).empty();
        if (!accepted)
            throw std::logic_error("search produced a seed of order " + std::to_string(n)
                + " that the verifier rejects");
        result.seeds.push_back(p);
        return result.seeds.size() < limit;
    });
    result.complete = finished;
    result.budget_exhausted = search.out_of_budget();
    result.nodes_visited = search.nodes();
    return result;
}

} // namespace wsp

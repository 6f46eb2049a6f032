#pragma once

#include "wsp/partition.hpp"
#include "wsp/verifier.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsp {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a construction step is asked to extend a partition that does
/// not satisfy Conditions 1-3.
class PreconditionError : public std::invalid_argument
{
public:
    PreconditionError(const std::string& what, ViolationReport report, std::size_t step = 0)
        : std::invalid_argument(what), report_(std::move(report)), step_(step)
    {
    }
    [[nodiscard]] const ViolationReport& report() const { return report_; }
    /// Chain position whose input failed re-validation (0 = the seed).
    [[nodiscard]] std::size_t step() const { return step_; }

private:
    ViolationReport report_;
    std::size_t step_;
};

/// The order-21 three-subset partition every chain starts from by default.
Partition base_partition_p3();

struct Step
{
    Partition partition;
    ConstructionTrace trace;
};

/// One extension step: p(s; m) -> p(s + 1; 3m - 1).
///
///  * subset 1 gains m + 2, 2m + 2 and 3m + 4 - a for each a > 4 in it;
///  * subset i (2 <= i <= s) gains 3m + 4 - a for each a > 4 in it;
///  * the new subset s + 1 is {m + 1} u {m + 3, ..., 2m + 1} u {2m + 3}.
///
/// Throws PreconditionError if p fails verify(p, all).
Step construct_step(const Partition& p, const VerifyOptions& options = {});

/// Same rules without checking the input.
Step construct_step_unchecked(const Partition& p);

/// Applies construct_step `steps` times. Every partition in the chain,
/// including the last, is re-verified; a failure throws PreconditionError
/// carrying the step index.
std::vector<Step> iterate(const Partition& seed, std::size_t steps, const VerifyOptions& options = {});

/// Properties of subset 1 that Conditions 1-3 do not cover but that decide
/// whether the next step's output again satisfies Conditions 1-3 (m = p.n()):
///  * lookahead_double (a, m + 2) for a = (m + 2) / 2 > 4 in subset 1: a and 2a
///    land in subset 1, and a + (2m + 2) = 3m + 4 - a;
///  * lookahead_extension (b - 3, 3m + 4 - b, 3m + 1) for b > 4 with b and b - 3
///    in subset 1;
///  * lookahead_extension (m - 1, 2m + 2, 3m + 1) if m - 1 is in subset 1.
std::vector<Violation> lookahead_violations(const Partition& p);

/// verify(p, all) plus lookahead_violations(p), plus seed_advisory violations
/// for 5 in subset 1 (the next output has n' in subset 1) and 6 in subset 1
/// (the output after that fails the same way via the predecessor rule).
///
/// No violations other than advisories: one step yields a partition
/// satisfying Conditions 1-3 (with 5 in subset 1, Conditions 1 and 2 only).
/// Empty report: every further step does too.
ViolationReport validate_seed(const Partition& p, const VerifyOptions& options = {});

/// Order of p(s) in the chain from the order-21 base: m_3 = 21, m_{s+1} = 3 m_s - 1.
/// Throws std::invalid_argument for s < 3.
BigInt bound(unsigned s);
/// The closed form (41 * 3^(s-3) + 1) / 2 of the same sequence.
BigInt bound_closed_form(unsigned s);

struct BoundSequence
{
    unsigned start_s = 3;
    /// orders[k] is the order of p(start_s + k).
    std::vector<BigInt> orders;
};

BoundSequence bound_table(unsigned s_max);

/// Values from other constructions, shown next to the table for comparison only.
struct LiteratureValue
{
    unsigned s;
    unsigned order;
    const char* kind; // "weak" or "strong"
};

std::vector<LiteratureValue> literature_values(unsigned s);

} // namespace wsp

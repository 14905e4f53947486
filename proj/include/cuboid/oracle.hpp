#pragma once

#include <cstdint>
#include <vector>

#include "cuboid/structural.hpp"

namespace cuboid {

/// Number of candidates the brute-force search tests:
/// 2 * #divisors(p^10 q^10), with the divisors generated compositionally.
std::uint64_t bruteforce_candidate_count(const Params& params);

/// All integer roots of Q_pq, sorted ascending, found by testing +-d for
/// every divisor d of p^10 q^10 (any integer root of the monic Q_pq divides
/// its constant term). Every candidate is tested; there is no early exit.
/// Requires p, q >= 1 only, so degenerate construction-only pairs can be
/// cross-checked.
std::vector<BigInt> bruteforce_integer_roots(const Params& params);

/// Side-by-side run of the structural decision and the brute-force search.
/// Disagreement is a first-class failure record, not an exception: it would
/// indicate a defect in one of the two implementations.
struct EquivalenceReport {
    Params params;
    Verdict structural;
    std::vector<BigInt> bruteforce_roots;
    std::uint64_t candidates_tested = 0;
    bool agree = false;
    std::int64_t structural_us = 0;
    std::int64_t bruteforce_us = 0;
};

EquivalenceReport check_equivalence(const Params& params);

}  // namespace cuboid

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cuboid/coeff_system.hpp"
#include "cuboid/structural.hpp"

namespace cuboid::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Deterministic instance generators shared by the invariant suites and the
// property tests.
Params random_coprime_params(std::mt19937_64& rng, std::int64_t max_pq);
RootHypothesis random_hypothesis(std::mt19937_64& rng, const Params& params);
TripleSplit random_split(std::mt19937_64& rng, const Params& params);

/// Coefficient-level inversion pairing in both directions, parity, and the
/// parameter-swap identity, on random parameter pairs.
CheckResult check_symmetry_suite(int count = 200, std::int64_t max_pq = 1000,
                                 std::uint64_t seed = 0x5eed0001);

/// The q = 1 option residuals against their closed and factored forms for
/// all 1 <= p <= sweep_max, and the no-roots sweeps over primes <= sweep_max
/// in both orientations.
CheckResult check_special_case_pins(std::int64_t sweep_max = 10000);

/// evaluate(Q_pq, a0) = a0^5 * elimination_residual on random instances.
CheckResult check_root_residual_identity(int count = 1000, std::int64_t max_pq = 1000,
                                         std::uint64_t seed = 0x5eed0002);

/// elimination_residual(hypothesis_from_split(s)) = cp * cq * split_residual(s)
/// on random splits, plus the coprimality and product invariants.
CheckResult check_split_bridge_identity(int count = 1000, std::int64_t max_pq = 1000,
                                        std::uint64_t seed = 0x5eed0003);

/// The implied quadratic relations vanish for derived coefficients, and the
/// quartic relations vanish exactly on balanced instances.
CheckResult check_implied_relations(int count = 200, std::int64_t max_pq = 500,
                                    std::uint64_t seed = 0x5eed0004);

/// reconstruct_residual is the zero polynomial exactly when the elimination
/// residual vanishes; tested in both directions.
CheckResult check_reconstruction_iff(int count = 200, std::int64_t max_pq = 500,
                                     std::uint64_t seed = 0x5eed0005);

/// Structural decision vs brute-force oracle for every coprime ordered pair
/// p != q within the bound; also requires zero integer roots throughout.
CheckResult check_oracle_equivalence(std::int64_t bound = 40);

/// Every suite above with its default parameters.
std::vector<CheckResult> run_all();

}  // namespace cuboid::selftest

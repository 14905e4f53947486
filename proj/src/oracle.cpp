#include "cuboid/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "cuboid/numtheory.hpp"

namespace cuboid {

namespace {

PrimeFactorization constant_term_factorization(const Params& params) {
    // p^10 q^10 factored compositionally; the huge product is never factored.
    return PrimeFactorization::product(factorize(static_cast<std::uint64_t>(params.p)).scaled(10),
                                       factorize(static_cast<std::uint64_t>(params.q)).scaled(10));
}

}  // namespace

std::uint64_t bruteforce_candidate_count(const Params& params) {
    params.require_construction_valid();
    return 2 * constant_term_factorization(params).divisor_count();
}

std::vector<BigInt> bruteforce_integer_roots(const Params& params) {
    params.require_construction_valid();
    const IntPolynomial qpq = build_qpq(params);
    std::vector<BigInt> roots;
    for (const BigInt& d : divisors(constant_term_factorization(params))) {
        if (qpq.evaluate(d) == 0) roots.push_back(d);
        if (qpq.evaluate(-d) == 0) roots.push_back(-d);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

EquivalenceReport check_equivalence(const Params& params) {
    params.require_decision_valid();
    using clock = std::chrono::steady_clock;

    EquivalenceReport report;
    report.params = params;

    const auto t0 = clock::now();
    report.structural = decide_roots(params);
    const auto t1 = clock::now();
    report.bruteforce_roots = bruteforce_integer_roots(params);
    const auto t2 = clock::now();

    report.candidates_tested = bruteforce_candidate_count(params);
    report.structural_us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    report.bruteforce_us = std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count();
    report.agree = report.structural.witnesses == report.bruteforce_roots;
    return report;
}

}  // namespace cuboid

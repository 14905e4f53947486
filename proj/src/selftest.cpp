#include "cuboid/selftest.hpp"

#include <numeric>
#include <sstream>

#include "cuboid/numtheory.hpp"
#include "cuboid/oracle.hpp"
#include "cuboid/special_cases.hpp"

namespace cuboid::selftest {

namespace {

std::string pair_str(const Params& params) {
    return "(" + std::to_string(params.p) + ", " + std::to_string(params.q) + ")";
}

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

}  // namespace

Params random_coprime_params(std::mt19937_64& rng, std::int64_t max_pq) {
    std::uniform_int_distribution<std::int64_t> dist(1, max_pq);
    while (true) {
        const Params params{dist(rng), dist(rng)};
        if (params.valid_for_decision()) return params;
    }
}

RootHypothesis random_hypothesis(std::mt19937_64& rng, const Params& params) {
    const auto f = PrimeFactorization::product(
        factorize(static_cast<std::uint64_t>(params.p)).scaled(2),
        factorize(static_cast<std::uint64_t>(params.q)).scaled(2));
    const auto divs = divisors(f);
    std::uniform_int_distribution<std::size_t> pick(0, divs.size() - 1);
    const BigInt a0 = divs[pick(rng)];
    return {a0, f.value() / a0};
}

TripleSplit random_split(std::mt19937_64& rng, const Params& params) {
    std::uniform_int_distribution<int> bucket(0, 2);
    TripleSplit s;
    auto place = [&](std::int64_t n, std::int64_t* a, std::int64_t* b, std::int64_t* c) {
        for (const auto& e : factorize(static_cast<std::uint64_t>(n)).factors) {
            std::int64_t v = 1;
            for (unsigned i = 0; i < e.multiplicity; ++i) v *= static_cast<std::int64_t>(e.prime);
            const int d = bucket(rng);
            *(d == 0 ? a : d == 1 ? b : c) *= v;
        }
    };
    place(params.p, &s.ap, &s.bp, &s.cp);
    place(params.q, &s.aq, &s.bq, &s.cq);
    return s;
}

CheckResult check_symmetry_suite(int count, std::int64_t max_pq, std::uint64_t seed) {
    const std::string name = "symmetry-suite";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> tdist(-1000000, 1000000);
    for (int i = 0; i < count; ++i) {
        const Params params = random_coprime_params(rng, max_pq);
        const IntPolynomial qpq = build_qpq(params);
        const IntPolynomial qqp = build_qqp(params);
        if (!inversion_related(qpq, qqp, params) || !inversion_related(qqp, qpq, params)) {
            return fail(name, "inversion pairing failed at " + pair_str(params));
        }
        if (!check_parity(qpq) || !check_parity(qqp)) {
            return fail(name, "parity failed at " + pair_str(params));
        }
        if (qqp != build_qpq(params.swapped())) {
            return fail(name, "parameter-swap identity failed at " + pair_str(params));
        }
        const BigInt t = tdist(rng);
        if (qpq.evaluate(t) != qpq.evaluate(-t)) {
            return fail(name, "value-level parity failed at " + pair_str(params));
        }
    }
    return pass(name, std::to_string(count) + " random parameter pairs with p, q <= " +
                          std::to_string(max_pq));
}

CheckResult check_special_case_pins(std::int64_t sweep_max) {
    const std::string name = "special-case-pins";
    for (std::int64_t p = 1; p <= sweep_max; ++p) {
        const OptionResiduals r = option_residuals_q1(p);
        if (r.whole_in_a != closed_form_a(p) || r.whole_in_b != closed_form_b(p) ||
            r.whole_in_c != closed_form_c(p)) {
            return fail(name, "option residual disagrees with closed form at p=" +
                                  std::to_string(p));
        }
        if (!factored_forms_agree(p)) {
            return fail(name, "factored form disagrees with closed form at p=" +
                                  std::to_string(p));
        }
        if (p == 1) {
            if (r.whole_in_a != 0 || r.whole_in_b != 0 || r.whole_in_c != 0) {
                return fail(name, "option residuals must vanish at p=1");
            }
        } else if (r.whole_in_a >= 0 || r.whole_in_b >= 0 || r.whole_in_c >= 0) {
            return fail(name, "option residual lost its sign at p=" + std::to_string(p));
        }
    }
    const PrimeSweepReport with_p = verify_no_roots_prime_p(sweep_max);
    const PrimeSweepReport with_q = verify_no_roots_prime_q(sweep_max);
    if (!with_p.all_no_roots() || !with_q.all_no_roots()) {
        return fail(name, "a prime sweep reported an integer root");
    }
    if (with_p.primes_checked != with_q.primes_checked) {
        return fail(name, "prime sweeps disagree on the primes checked");
    }
    return pass(name, "closed forms pinned for p <= " + std::to_string(sweep_max) + "; " +
                          std::to_string(with_p.primes_checked.size()) +
                          " primes verified in both orientations");
}

CheckResult check_root_residual_identity(int count, std::int64_t max_pq, std::uint64_t seed) {
    const std::string name = "root-residual-identity";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Params params = random_coprime_params(rng, max_pq);
        const RootHypothesis hyp = random_hypothesis(rng, params);
        const BigInt lhs = build_qpq(params).evaluate(hyp.a0);
        const BigInt rhs = pow_ui(hyp.a0, 5) * elimination_residual(params, hyp);
        if (lhs != rhs) {
            return fail(name, "identity failed at " + pair_str(params) + " with a0=" +
                                  hyp.a0.get_str());
        }
    }
    return pass(name, std::to_string(count) + " random factor-pair instances");
}

CheckResult check_split_bridge_identity(int count, std::int64_t max_pq, std::uint64_t seed) {
    const std::string name = "split-bridge-identity";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Params params = random_coprime_params(rng, max_pq);
        const TripleSplit s = random_split(rng, params);
        if (!pairwise_coprime(s)) {
            return fail(name, "split buckets not pairwise coprime at " + pair_str(params));
        }
        if (s.ap * s.bp * s.cp != params.p || s.aq * s.bq * s.cq != params.q) {
            return fail(name, "split products do not reconstruct " + pair_str(params));
        }
        const RootHypothesis hyp = hypothesis_from_split(s);
        const BigInt residual = split_residual(s);
        if (elimination_residual(params, hyp) != BigInt(s.cp) * s.cq * residual) {
            return fail(name, "bridge identity failed at " + pair_str(params));
        }
        if (build_qpq(params).evaluate(hyp.a0) !=
            pow_ui(hyp.a0, 5) * s.cp * s.cq * residual) {
            return fail(name, "chained root identity failed at " + pair_str(params));
        }
    }
    return pass(name, std::to_string(count) + " random splits");
}

CheckResult check_implied_relations(int count, std::int64_t max_pq, std::uint64_t seed) {
    const std::string name = "implied-relations";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Params params = random_coprime_params(rng, max_pq);
        const RootHypothesis hyp = random_hypothesis(rng, params);
        const CoefficientSet coeffs = derive_coefficients(params, hyp);
        const ImpliedResiduals r = implied_relation_residuals(params, hyp, coeffs);
        if (r.quadratic_first != 0 || r.quadratic_second != 0) {
            return fail(name, "quadratic-level relation failed at " + pair_str(params));
        }
        const BigInt elim = elimination_residual(params, hyp);
        if (r.quartic_first != hyp.a0 * elim || r.quartic_second != -hyp.b0 * elim) {
            return fail(name, "quartic residuals decouple from the elimination residual at " +
                                  pair_str(params));
        }
    }
    // Balanced instances: symmetric p = q with a0 = b0 = p^2 satisfy the
    // quartic balance, so all four residuals must vanish.
    for (std::int64_t k = 1; k <= count; ++k) {
        const Params params{k, k};
        const RootHypothesis hyp{sq(BigInt(k)), sq(BigInt(k))};
        const CoefficientSet coeffs = derive_coefficients(params, hyp);
        const ImpliedResiduals r = implied_relation_residuals(params, hyp, coeffs);
        if (r.quartic_first != 0 || r.quartic_second != 0 || r.quadratic_first != 0 ||
            r.quadratic_second != 0) {
            return fail(name, "residuals did not vanish on the balanced instance p=q=" +
                                  std::to_string(k));
        }
    }
    return pass(name, std::to_string(count) + " random and " + std::to_string(count) +
                          " balanced instances");
}

CheckResult check_reconstruction_iff(int count, std::int64_t max_pq, std::uint64_t seed) {
    const std::string name = "reconstruction-iff";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Params params = random_coprime_params(rng, max_pq);
        const RootHypothesis hyp = random_hypothesis(rng, params);
        const IntPolynomial residual = reconstruct_residual(params, hyp);
        const BigInt elim = elimination_residual(params, hyp);
        for (int k : {10, 8, 6, 2, 0}) {
            if (residual.coefficient(k) != 0) {
                return fail(name, "degree-" + std::to_string(k) +
                                      " coefficient survived reconstruction at " +
                                      pair_str(params));
            }
        }
        if (residual.coefficient(4) != hyp.a0 * elim) {
            return fail(name, "degree-4 residual mismatch at " + pair_str(params));
        }
        if (residual.is_zero() != (elim == 0)) {
            return fail(name, "zero-polynomial equivalence failed at " + pair_str(params));
        }
    }
    for (std::int64_t k = 1; k <= count; ++k) {
        const Params params{k, k};
        const RootHypothesis hyp{sq(BigInt(k)), sq(BigInt(k))};
        if (elimination_residual(params, hyp) != 0 ||
            !reconstruct_residual(params, hyp).is_zero()) {
            return fail(name, "balanced instance p=q=" + std::to_string(k) +
                                  " did not reconstruct to zero");
        }
    }
    return pass(name, std::to_string(count) + " random and " + std::to_string(count) +
                          " balanced instances");
}

CheckResult check_oracle_equivalence(std::int64_t bound) {
    const std::string name = "oracle-equivalence";
    std::uint64_t pairs = 0;
    for (std::int64_t p = 1; p <= bound; ++p) {
        for (std::int64_t q = 1; q <= bound; ++q) {
            if (p == q || std::gcd(p, q) != 1) continue;
            ++pairs;
            const EquivalenceReport report = check_equivalence({p, q});
            if (!report.agree) {
                return fail(name, "structural and brute-force verdicts disagree at " +
                                      pair_str({p, q}));
            }
            if (report.structural.has_integer_root || !report.bruteforce_roots.empty()) {
                return fail(name, "integer root reported at " + pair_str({p, q}));
            }
        }
    }
    std::ostringstream detail;
    detail << pairs << " coprime ordered pairs with p, q <= " << bound
           << " agree with zero roots";
    return pass(name, detail.str());
}

std::vector<CheckResult> run_all() {
    return {
        check_symmetry_suite(),        check_special_case_pins(),
        check_root_residual_identity(), check_split_bridge_identity(),
        check_implied_relations(),     check_reconstruction_iff(),
        check_oracle_equivalence(),
    };
}

}  // namespace cuboid::selftest

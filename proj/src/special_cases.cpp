#include "cuboid/special_cases.hpp"

#include <stdexcept>

#include "cuboid/numtheory.hpp"

namespace cuboid {

OptionResiduals option_residuals_q1(std::int64_t p) {
    if (p < 1) throw std::invalid_argument("option residuals require p >= 1");
    return {split_residual({p, 1, 1, 1, 1, 1}),
            split_residual({1, p, 1, 1, 1, 1}),
            split_residual({1, 1, p, 1, 1, 1})};
}

BigInt closed_form_a(std::int64_t p) {
    const BigInt p2 = sq(BigInt(p));
    return 16 * p2 - 16 * pow_ui(p2, 4);
}

BigInt closed_form_b(std::int64_t p) {
    const BigInt p2 = sq(BigInt(p));
    const BigInt p4 = sq(p2);
    const BigInt p6 = p4 * p2;
    const BigInt p8 = sq(p4);
    return -8 * p8 * p2 - 8 * p8 - 16 * p6 + 16 * p4 + 8 * p2 + 8;
}

BigInt closed_form_c(std::int64_t p) {
    const BigInt p2 = sq(BigInt(p));
    return -32 * p2 * sq(p2) + 32 * p2;
}

BigInt factored_form_a(std::int64_t p) {
    const BigInt b(p);
    return -16 * sq(b) * (b - 1) * (b + 1) * (sq(b) + b + 1) * (sq(b) - b + 1);
}

BigInt factored_form_b(std::int64_t p) {
    const BigInt b(p);
    const BigInt p2 = sq(b);
    const BigInt p4 = sq(p2);
    return -8 * (b - 1) * (b + 1) * (sq(p4) + 2 * p4 * p2 + 4 * p4 + 2 * p2 + 1);
}

BigInt factored_form_c(std::int64_t p) {
    const BigInt b(p);
    return -32 * sq(b) * (b - 1) * (b + 1) * (sq(b) + 1);
}

bool factored_forms_agree(std::int64_t p) {
    return factored_form_a(p) == closed_form_a(p) && factored_form_b(p) == closed_form_b(p) &&
           factored_form_c(p) == closed_form_c(p);
}

namespace {

PrimeSweepReport sweep(std::int64_t prime_max, bool prime_is_p) {
    if (prime_max < 2) throw std::invalid_argument("prime sweep requires prime_max >= 2");
    PrimeSweepReport report;
    report.prime_max = prime_max;
    report.primes_checked = primes_up_to(prime_max);
    for (std::int64_t x : report.primes_checked) {
        // The three ways the prime can sit in one bucket of its own triple.
        const TripleSplit options[3] = {
            prime_is_p ? TripleSplit{x, 1, 1, 1, 1, 1} : TripleSplit{1, 1, 1, x, 1, 1},
            prime_is_p ? TripleSplit{1, x, 1, 1, 1, 1} : TripleSplit{1, 1, 1, 1, x, 1},
            prime_is_p ? TripleSplit{1, 1, x, 1, 1, 1} : TripleSplit{1, 1, 1, 1, 1, x},
        };
        bool ok = split_residual(options[0]) != 0 && split_residual(options[1]) != 0 &&
                  split_residual(options[2]) != 0;
        const Params params = prime_is_p ? Params{x, 1} : Params{1, x};
        ok = ok && !decide_roots(params).has_integer_root;
        if (!ok) report.failures.push_back(x);
    }
    return report;
}

}  // namespace

PrimeSweepReport verify_no_roots_prime_p(std::int64_t prime_max) { return sweep(prime_max, true); }

PrimeSweepReport verify_no_roots_prime_q(std::int64_t prime_max) { return sweep(prime_max, false); }

}  // namespace cuboid

#pragma once

#include <cstdint>
#include <vector>

#include "cuboid/structural.hpp"

namespace cuboid {

/// Split residuals for q = 1 with the whole of p placed in bucket a, b, or c.
struct OptionResiduals {
    BigInt whole_in_a;  // split (p,1,1 | 1,1,1)
    BigInt whole_in_b;  // split (1,p,1 | 1,1,1)
    BigInt whole_in_c;  // split (1,1,p | 1,1,1)
};

OptionResiduals option_residuals_q1(std::int64_t p);

// Closed forms of the three option residuals, transcribed as independent
// literal polynomials in p so they can cross-validate the 18-term residual
// table. Each has +-1 as its only integer zeros.
BigInt closed_form_a(std::int64_t p);   // 16 p^2 - 16 p^8
BigInt closed_form_b(std::int64_t p);   // -8 p^10 - 8 p^8 - 16 p^6 + 16 p^4 + 8 p^2 + 8
BigInt closed_form_c(std::int64_t p);   // -32 p^6 + 32 p^2
BigInt factored_form_a(std::int64_t p); // -16 p^2 (p-1)(p+1)(p^2+p+1)(p^2-p+1)
BigInt factored_form_b(std::int64_t p); // -8 (p-1)(p+1)(p^8+2p^6+4p^4+2p^2+1)
BigInt factored_form_c(std::int64_t p); // -32 p^2 (p-1)(p+1)(p^2+1)

/// True iff all three factored forms equal their expanded counterparts at p.
bool factored_forms_agree(std::int64_t p);

/// Result of a no-integer-roots sweep over primes.
struct PrimeSweepReport {
    std::int64_t prime_max = 0;
    std::vector<std::int64_t> primes_checked;
    /// Primes where a zero option residual or a root verdict appeared.
    std::vector<std::int64_t> failures;
    bool all_no_roots() const { return failures.empty(); }
};

/// For every prime p <= prime_max: all three option residuals are nonzero
/// and decide_roots({p, 1}) reports no roots.
PrimeSweepReport verify_no_roots_prime_p(std::int64_t prime_max);

/// The mirror sweep: decide_roots({1, q}) for every prime q <= prime_max.
PrimeSweepReport verify_no_roots_prime_q(std::int64_t prime_max);

}  // namespace cuboid

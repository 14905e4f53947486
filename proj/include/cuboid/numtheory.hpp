#pragma once

#include <cstdint>
#include <vector>

#include "cuboid/bigint.hpp"

namespace cuboid {

/// Greatest common divisor. gcd(0, 0) is rejected.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Complete prime factorization as an ordered list of (prime, multiplicity)
/// pairs. Primes are strictly increasing, every multiplicity is >= 1, and
/// the factorization of 1 is the empty list.
struct PrimeFactorization {
    struct Entry {
        std::uint64_t prime = 0;
        unsigned multiplicity = 0;
        bool operator==(const Entry&) const = default;
    };

    std::vector<Entry> factors;

    bool operator==(const PrimeFactorization&) const = default;

    /// Reassembled product prime^multiplicity, exact.
    BigInt value() const;

    /// Number of divisors: prod(multiplicity + 1).
    std::uint64_t divisor_count() const;

    /// Same primes with every multiplicity scaled by k >= 1.
    PrimeFactorization scaled(unsigned k) const;

    /// Factorization of value(a) * value(b). For coprime inputs this is the
    /// disjoint union of the two factor lists.
    static PrimeFactorization product(const PrimeFactorization& a,
                                      const PrimeFactorization& b);
};

/// Trial-division factorization of n >= 1. n = 0 is rejected.
PrimeFactorization factorize(std::uint64_t n);

/// All divisors in increasing order. The count equals divisor_count().
std::vector<BigInt> divisors(const PrimeFactorization& f);

/// Primes up to and including n, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

}  // namespace cuboid

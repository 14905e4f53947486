#include "cuboid/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cuboid {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    return std::gcd(a, b);
}

BigInt PrimeFactorization::value() const {
    BigInt v = 1;
    for (const auto& e : factors) {
        v *= pow_ui(BigInt(static_cast<unsigned long>(e.prime)), e.multiplicity);
    }
    return v;
}

std::uint64_t PrimeFactorization::divisor_count() const {
    std::uint64_t n = 1;
    for (const auto& e : factors) n *= e.multiplicity + 1;
    return n;
}

PrimeFactorization PrimeFactorization::scaled(unsigned k) const {
    if (k == 0) throw std::invalid_argument("scale factor must be >= 1");
    PrimeFactorization out = *this;
    for (auto& e : out.factors) e.multiplicity *= k;
    return out;
}

PrimeFactorization PrimeFactorization::product(const PrimeFactorization& a,
                                               const PrimeFactorization& b) {
    PrimeFactorization out;
    auto ia = a.factors.begin();
    auto ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end() || (ia != a.factors.end() && ia->prime < ib->prime)) {
            out.factors.push_back(*ia++);
        } else if (ia == a.factors.end() || ib->prime < ia->prime) {
            out.factors.push_back(*ib++);
        } else {
            out.factors.push_back({ia->prime, ia->multiplicity + ib->multiplicity});
            ++ia;
            ++ib;
        }
    }
    return out;
}

PrimeFactorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize(0) is undefined");
    PrimeFactorization out;
    auto divide_out = [&](std::uint64_t p) {
        unsigned mult = 0;
        while (n % p == 0) {
            n /= p;
            ++mult;
        }
        if (mult > 0) out.factors.push_back({p, mult});
    };
    divide_out(2);
    for (std::uint64_t d = 3; d * d <= n; d += 2) divide_out(d);
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

std::vector<BigInt> divisors(const PrimeFactorization& f) {
    std::vector<BigInt> out = {BigInt(1)};
    for (const auto& e : f.factors) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned j = 1; j <= e.multiplicity; ++j) {
            pk *= static_cast<unsigned long>(e.prime);
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

}  // namespace cuboid

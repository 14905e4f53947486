#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace cuboid {

using BigInt = mpz_class;

inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt pow_ui(std::int64_t base, unsigned long exp) {
    return pow_ui(BigInt(static_cast<long>(base)), exp);
}

inline BigInt sq(const BigInt& x) { return x * x; }

}  // namespace cuboid

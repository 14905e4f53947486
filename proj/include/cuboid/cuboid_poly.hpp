#pragma once

#include <cstdint>
#include <vector>

#include "cuboid/bigint.hpp"

namespace cuboid {

/// The parameter pair (p, q).
///
/// Construction contexts only need p >= 1 and q >= 1; the decision entry
/// points additionally require gcd(p, q) = 1 and p != q. Invalid pairs stay
/// representable so that rejection paths can be tested.
struct Params {
    std::int64_t p = 0;
    std::int64_t q = 0;

    bool operator==(const Params&) const = default;

    bool valid_for_construction() const;
    bool valid_for_decision() const;

    /// Throws std::invalid_argument naming the violated requirement.
    void require_construction_valid() const;
    void require_decision_valid() const;

    Params swapped() const { return {q, p}; }
};

/// Dense univariate polynomial with exact integer coefficients.
/// coefficient(k) multiplies t^k; the representation is trimmed so that
/// equality is semantic. The zero polynomial has degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coefficient(int k) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool leading_is_one() const;

    /// Exact value at t (Horner).
    BigInt evaluate(const BigInt& t) const;

    /// True iff every odd-degree coefficient is zero.
    bool even_powers_only() const;

    bool operator==(const IntPolynomial&) const = default;
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// t^8 coefficient block of Q_pq: (2q^2 + p^2)(3q^2 - 2p^2).
BigInt t8_block(std::int64_t p, std::int64_t q);

/// t^6 coefficient block of Q_pq: q^8 + 10 p^2 q^6 + 4 p^4 q^4 - 14 p^6 q^2 + p^8.
BigInt t6_block(std::int64_t p, std::int64_t q);

/// The degree-10 monic even polynomial Q_pq, built exactly:
///   t^10 + t8_block(p,q) t^8 + t6_block(p,q) t^6
///        - p^2 q^2 t6_block(q,p) t^4 - p^6 q^6 t8_block(q,p) t^2 - p^10 q^10.
IntPolynomial build_qpq(const Params& params);

/// Q_qp, defined as build_qpq with the parameters exchanged.
IntPolynomial build_qqp(const Params& params);

/// True iff all odd-degree coefficients of poly vanish.
bool check_parity(const IntPolynomial& poly);

/// Coefficient-level inversion pairing: for every degree k,
///   g.coefficient(10-k) * p^10 q^10 == -f.coefficient(k) * (p^2 q^2)^k.
/// Equivalent to g(t) = -f(p^2 q^2 / t) t^10 / (p^10 q^10) without leaving
/// integer arithmetic.
bool inversion_related(const IntPolynomial& f, const IntPolynomial& g, const Params& params);

/// inversion_related applied to (Q_pq, Q_qp) for these params.
bool check_inversion_symmetry(const Params& params);

}  // namespace cuboid

#pragma once

#include <array>
#include <utility>

#include "cuboid/cuboid_poly.hpp"

namespace cuboid {

/// A putative positive integer root A0 of Q_pq together with its inversion
/// mirror B0 (a root of Q_qp). Both values are stored, rather than deriving
/// B0 by division, so that invalid near-miss pairs are representable for
/// negative tests; validity means a0 >= 1, b0 >= 1 and a0 * b0 = p^2 q^2.
struct RootHypothesis {
    BigInt a0;
    BigInt b0;

    bool operator==(const RootHypothesis&) const = default;
    bool valid_for(const Params& params) const;
    void require_valid_for(const Params& params) const;
};

/// The eight cofactor-octic coefficients. When produced by the derive
/// operations they satisfy c0 = p^6 q^6 b0^2, d0 = p^6 q^6 a0^2,
/// c2 = d6 p^2 q^2 b0^2, d2 = c6 p^2 q^2 a0^2.
struct CoefficientSet {
    BigInt c6, d6, c4, d4, c2, d2, c0, d0;
    bool operator==(const CoefficientSet&) const = default;
};

/// c6 = a0^2 + t8_block(p,q);  d6 = b0^2 + t8_block(q,p).
std::pair<BigInt, BigInt> derive_c6_d6(const Params& params, const RootHypothesis& hyp);

/// c4 = a0^4 + t8_block(p,q) a0^2 + t6_block(p,q);  d4 analogously with b0 and
/// the parameters exchanged.
std::pair<BigInt, BigInt> derive_c4_d4(const Params& params, const RootHypothesis& hyp);

/// The four eliminated coefficients (c0, c2, d0, d2) for given c6, d6.
std::array<BigInt, 4> derive_c0_c2_d0_d2(const Params& params, const RootHypothesis& hyp,
                                         const BigInt& c6, const BigInt& d6);

/// All eight coefficients via the derive operations.
CoefficientSet derive_coefficients(const Params& params, const RootHypothesis& hyp);

/// a0 * c4 - b0 * d4, signed. Zero iff the two quartic coefficients balance.
BigInt balance_residual(const RootHypothesis& hyp, const BigInt& c4, const BigInt& d4);

/// balance_residual applied to the derived c4, d4: the single quintic
/// constraint left on (a0, b0) after eliminating all octic coefficients.
/// Satisfies evaluate(Q_pq, a0) = a0^5 * elimination_residual exactly.
BigInt elimination_residual(const Params& params, const RootHypothesis& hyp);

/// The two cofactor octics
///   C8 = t^8 + c6 t^6 + c4 t^4 + d6 p^2 q^2 b0^2 t^2 + p^6 q^6 b0^2,
///   D8 = t^8 + d6 t^6 + d4 t^4 + c6 p^2 q^2 a0^2 t^2 + p^6 q^6 a0^2.
std::pair<IntPolynomial, IntPolynomial> build_cofactor_octics(const Params& params,
                                                              const RootHypothesis& hyp,
                                                              const BigInt& c6, const BigInt& c4,
                                                              const BigInt& d6, const BigInt& d4);

/// build_qpq(params) minus the (t^2 - a0^2) * C8 expansion written with the
/// derived coefficients. Degrees 10, 8, 6, 2 and 0 cancel by construction;
/// the degree-4 coefficient equals a0 * elimination_residual, so the result
/// is the zero polynomial exactly when the elimination residual vanishes.
IntPolynomial reconstruct_residual(const Params& params, const RootHypothesis& hyp);

/// Signed residuals (LHS - RHS) of the four coefficient relations implied by
/// the eliminated system: the two quartic-level relations (involving c4 and
/// d4) and the two quadratic-level relations (involving d6 and c6), in the
/// displayed order.
struct ImpliedResiduals {
    BigInt quartic_first, quartic_second;
    BigInt quadratic_first, quadratic_second;
};

ImpliedResiduals implied_relation_residuals(const Params& params, const RootHypothesis& hyp,
                                            const CoefficientSet& coeffs);

}  // namespace cuboid

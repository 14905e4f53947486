#include "cuboid/coeff_system.hpp"

#include <stdexcept>

namespace cuboid {

namespace {

BigInt p2q2_of(const Params& params) { return sq(BigInt(params.p) * BigInt(params.q)); }

}  // namespace

bool RootHypothesis::valid_for(const Params& params) const {
    return params.valid_for_construction() && a0 >= 1 && b0 >= 1 && a0 * b0 == p2q2_of(params);
}

void RootHypothesis::require_valid_for(const Params& params) const {
    if (!valid_for(params)) {
        throw std::invalid_argument("root hypothesis requires a0 >= 1, b0 >= 1 and a0*b0 = p^2 q^2");
    }
}

std::pair<BigInt, BigInt> derive_c6_d6(const Params& params, const RootHypothesis& hyp) {
    hyp.require_valid_for(params);
    return {sq(hyp.a0) + t8_block(params.p, params.q), sq(hyp.b0) + t8_block(params.q, params.p)};
}

std::pair<BigInt, BigInt> derive_c4_d4(const Params& params, const RootHypothesis& hyp) {
    hyp.require_valid_for(params);
    const BigInt a2 = sq(hyp.a0), b2 = sq(hyp.b0);
    return {sq(a2) + t8_block(params.p, params.q) * a2 + t6_block(params.p, params.q),
            sq(b2) + t8_block(params.q, params.p) * b2 + t6_block(params.q, params.p)};
}

std::array<BigInt, 4> derive_c0_c2_d0_d2(const Params& params, const RootHypothesis& hyp,
                                         const BigInt& c6, const BigInt& d6) {
    const BigInt p2q2 = p2q2_of(params);
    const BigInt p6q6 = p2q2 * p2q2 * p2q2;
    const BigInt a2 = sq(hyp.a0), b2 = sq(hyp.b0);
    return {p6q6 * b2, d6 * p2q2 * b2, p6q6 * a2, c6 * p2q2 * a2};
}

CoefficientSet derive_coefficients(const Params& params, const RootHypothesis& hyp) {
    const auto [c6, d6] = derive_c6_d6(params, hyp);
    const auto [c4, d4] = derive_c4_d4(params, hyp);
    const auto eliminated = derive_c0_c2_d0_d2(params, hyp, c6, d6);
    return {c6, d6, c4, d4, eliminated[1], eliminated[3], eliminated[0], eliminated[2]};
}

BigInt balance_residual(const RootHypothesis& hyp, const BigInt& c4, const BigInt& d4) {
    return hyp.a0 * c4 - hyp.b0 * d4;
}

BigInt elimination_residual(const Params& params, const RootHypothesis& hyp) {
    const auto [c4, d4] = derive_c4_d4(params, hyp);
    return balance_residual(hyp, c4, d4);
}

std::pair<IntPolynomial, IntPolynomial> build_cofactor_octics(const Params& params,
                                                              const RootHypothesis& hyp,
                                                              const BigInt& c6, const BigInt& c4,
                                                              const BigInt& d6, const BigInt& d4) {
    hyp.require_valid_for(params);
    const auto eliminated = derive_c0_c2_d0_d2(params, hyp, c6, d6);
    std::vector<BigInt> c8(9, BigInt(0)), d8(9, BigInt(0));
    c8[8] = 1;
    c8[6] = c6;
    c8[4] = c4;
    c8[2] = eliminated[1];
    c8[0] = eliminated[0];
    d8[8] = 1;
    d8[6] = d6;
    d8[4] = d4;
    d8[2] = eliminated[3];
    d8[0] = eliminated[2];
    return {IntPolynomial(std::move(c8)), IntPolynomial(std::move(d8))};
}

IntPolynomial reconstruct_residual(const Params& params, const RootHypothesis& hyp) {
    hyp.require_valid_for(params);
    const auto [c6, d6] = derive_c6_d6(params, hyp);
    const auto [c4, d4] = derive_c4_d4(params, hyp);
    const BigInt p2q2 = p2q2_of(params);
    const BigInt p4q4 = sq(p2q2);
    const BigInt p6q6 = p2q2 * p4q4;
    const BigInt a2 = sq(hyp.a0), b2 = sq(hyp.b0);

    // (t^2 - a0^2) * C8 expanded with the derived coefficients.
    std::vector<BigInt> e(11, BigInt(0));
    e[10] = 1;
    e[8] = c6 - a2;
    e[6] = c4 - a2 * c6;
    e[4] = d6 * p2q2 * b2 - a2 * c4;
    e[2] = p2q2 * b2 * (p4q4 - a2 * d6);
    e[0] = -a2 * p6q6 * b2;
    return build_qpq(params) - IntPolynomial(std::move(e));
}

ImpliedResiduals implied_relation_residuals(const Params& params, const RootHypothesis& hyp,
                                            const CoefficientSet& coeffs) {
    const BigInt p2q2 = p2q2_of(params);
    const BigInt p4q4 = sq(p2q2);
    const BigInt a2 = sq(hyp.a0), b2 = sq(hyp.b0);
    ImpliedResiduals r;
    r.quartic_first = a2 * coeffs.c4 - coeffs.d6 * p2q2 * b2 - p2q2 * t6_block(params.q, params.p);
    r.quartic_second = b2 * coeffs.d4 - coeffs.c6 * p2q2 * a2 - p2q2 * t6_block(params.p, params.q);
    r.quadratic_first = b2 * (a2 * coeffs.d6 - p4q4) - p4q4 * t8_block(params.q, params.p);
    r.quadratic_second = a2 * (b2 * coeffs.c6 - p4q4) - p4q4 * t8_block(params.p, params.q);
    return r;
}

}  // namespace cuboid

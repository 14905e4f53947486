#include "cuboid/cuboid_poly.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cuboid {

namespace {
const BigInt kZero = 0;
}

bool Params::valid_for_construction() const { return p >= 1 && q >= 1; }

bool Params::valid_for_decision() const {
    return valid_for_construction() && p != q && std::gcd(p, q) == 1;
}

void Params::require_construction_valid() const {
    if (!valid_for_construction()) {
        throw std::invalid_argument("params require p >= 1 and q >= 1 (got p=" +
                                    std::to_string(p) + ", q=" + std::to_string(q) + ")");
    }
}

void Params::require_decision_valid() const {
    require_construction_valid();
    if (p == q) {
        throw std::invalid_argument("params require p != q (got p=q=" + std::to_string(p) + ")");
    }
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument("params require gcd(p, q) = 1 (got gcd=" +
                                    std::to_string(std::gcd(p, q)) + ")");
    }
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

bool IntPolynomial::leading_is_one() const { return !coeffs_.empty() && coeffs_.back() == 1; }

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

bool IntPolynomial::even_powers_only() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
        if (coeffs_[k] != 0) return false;
    }
    return true;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
    }
    return IntPolynomial(std::move(out));
}

BigInt t8_block(std::int64_t p, std::int64_t q) {
    const BigInt p2 = sq(BigInt(p));
    const BigInt q2 = sq(BigInt(q));
    return (2 * q2 + p2) * (3 * q2 - 2 * p2);
}

BigInt t6_block(std::int64_t p, std::int64_t q) {
    const BigInt p2 = sq(BigInt(p));
    const BigInt q2 = sq(BigInt(q));
    const BigInt p4 = sq(p2), q4 = sq(q2);
    const BigInt p6 = p4 * p2, q6 = q4 * q2;
    const BigInt p8 = sq(p4), q8 = sq(q4);
    return q8 + 10 * p2 * q6 + 4 * p4 * q4 - 14 * p6 * q2 + p8;
}

IntPolynomial build_qpq(const Params& params) {
    params.require_construction_valid();
    const std::int64_t p = params.p, q = params.q;
    const BigInt p2q2 = sq(BigInt(p) * BigInt(q));
    const BigInt p6q6 = p2q2 * p2q2 * p2q2;

    std::vector<BigInt> c(11, BigInt(0));
    c[10] = 1;
    c[8] = t8_block(p, q);
    c[6] = t6_block(p, q);
    c[4] = -p2q2 * t6_block(q, p);
    c[2] = -p6q6 * t8_block(q, p);
    c[0] = -p6q6 * p2q2 * p2q2;
    return IntPolynomial(std::move(c));
}

IntPolynomial build_qqp(const Params& params) { return build_qpq(params.swapped()); }

bool check_parity(const IntPolynomial& poly) { return poly.even_powers_only(); }

bool inversion_related(const IntPolynomial& f, const IntPolynomial& g, const Params& params) {
    params.require_construction_valid();
    const BigInt p2q2 = sq(BigInt(params.p) * BigInt(params.q));
    const BigInt p10q10 = pow_ui(p2q2, 5);
    BigInt scale = 1;  // (p^2 q^2)^k
    for (int k = 0; k <= 10; ++k) {
        if (g.coefficient(10 - k) * p10q10 != -f.coefficient(k) * scale) return false;
        scale *= p2q2;
    }
    return true;
}

bool check_inversion_symmetry(const Params& params) {
    return inversion_related(build_qpq(params), build_qqp(params), params);
}

}  // namespace cuboid

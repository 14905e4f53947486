#include "cuboid/structural.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cuboid/numtheory.hpp"

namespace cuboid {

namespace {

// Variables ordered (ap, bp, cp, aq, bq, cq). The first nine entries carry
// the positive side of the balance, the last nine the negated mirror side.
constexpr std::array<ResidualTerm, 18> kResidualTerms = {{
    {1, {10, 0, 4, 10, 0, 4}},
    {6, {6, 0, 2, 10, 4, 6}},
    {-1, {8, 2, 4, 8, 2, 4}},
    {-2, {10, 4, 6, 6, 0, 2}},
    {4, {6, 4, 4, 6, 4, 4}},
    {1, {10, 8, 8, 2, 0, 0}},
    {1, {2, 0, 0, 10, 8, 8}},
    {10, {4, 2, 2, 8, 6, 6}},
    {-14, {8, 6, 6, 4, 2, 2}},
    {-1, {0, 10, 4, 0, 10, 4}},
    {-6, {4, 10, 6, 0, 6, 2}},
    {1, {2, 8, 4, 2, 8, 4}},
    {2, {0, 6, 2, 4, 10, 6}},
    {-4, {4, 6, 4, 4, 6, 4}},
    {-1, {0, 2, 0, 8, 10, 8}},
    {-1, {8, 10, 8, 0, 2, 0}},
    {-10, {6, 8, 6, 2, 4, 2}},
    {14, {2, 4, 2, 6, 8, 6}},
}};

void require_positive(const TripleSplit& s) {
    if (s.ap < 1 || s.bp < 1 || s.cp < 1 || s.aq < 1 || s.bq < 1 || s.cq < 1) {
        throw std::invalid_argument("triple split requires six positive bucket products");
    }
}

}  // namespace

std::span<const ResidualTerm> split_residual_terms() { return kResidualTerms; }

BigInt split_residual_with_terms(const TripleSplit& split, std::span<const ResidualTerm> terms) {
    require_positive(split);
    const std::array<std::int64_t, 6> vars = {split.ap, split.bp, split.cp,
                                              split.aq, split.bq, split.cq};
    BigInt total = 0;
    BigInt monomial;
    for (const auto& term : terms) {
        monomial = term.coefficient;
        for (std::size_t v = 0; v < 6; ++v) {
            if (term.exponents[v] == 0 || vars[v] == 1) continue;
            monomial *= pow_ui(vars[v], term.exponents[v]);
        }
        total += monomial;
    }
    return total;
}

BigInt split_residual(const TripleSplit& split) {
    return split_residual_with_terms(split, kResidualTerms);
}

RootHypothesis hypothesis_from_split(const TripleSplit& split) {
    require_positive(split);
    return {sq(BigInt(split.ap)) * split.cp * sq(BigInt(split.aq)) * split.cq,
            sq(BigInt(split.bp)) * split.cp * sq(BigInt(split.bq)) * split.cq};
}

std::pair<BigInt, BigInt> candidate_roots(const TripleSplit& split) {
    BigInt a0 = hypothesis_from_split(split).a0;
    return {a0, -a0};
}

bool pairwise_coprime(const TripleSplit& split) {
    const std::array<std::int64_t, 6> vars = {split.ap, split.bp, split.cp,
                                              split.aq, split.bq, split.cq};
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (std::gcd(vars[i], vars[j]) != 1) return false;
        }
    }
    return true;
}

std::vector<TripleSplit> enumerate_splits(const Params& params) {
    params.require_construction_valid();
    if (std::gcd(params.p, params.q) != 1) {
        throw std::invalid_argument("split enumeration requires gcd(p, q) = 1");
    }

    // Prime powers of p first, then of q, each list ascending by prime.
    struct PrimePower {
        std::int64_t value;
        bool from_p;
    };
    std::vector<PrimePower> powers;
    for (const auto& e : factorize(static_cast<std::uint64_t>(params.p)).factors) {
        std::int64_t v = 1;
        for (unsigned i = 0; i < e.multiplicity; ++i) v *= static_cast<std::int64_t>(e.prime);
        powers.push_back({v, true});
    }
    for (const auto& e : factorize(static_cast<std::uint64_t>(params.q)).factors) {
        std::int64_t v = 1;
        for (unsigned i = 0; i < e.multiplicity; ++i) v *= static_cast<std::int64_t>(e.prime);
        powers.push_back({v, false});
    }

    std::size_t total = 1;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        total *= 3;
        if (total > 100000000) {
            throw std::invalid_argument("too many distinct primes for the split enumeration");
        }
    }

    std::vector<TripleSplit> out;
    out.reserve(total);
    std::vector<int> digits(powers.size(), 0);  // 0 -> a, 1 -> b, 2 -> c
    while (true) {
        TripleSplit s;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            std::int64_t* bucket;
            if (powers[i].from_p) {
                bucket = digits[i] == 0 ? &s.ap : digits[i] == 1 ? &s.bp : &s.cp;
            } else {
                bucket = digits[i] == 0 ? &s.aq : digits[i] == 1 ? &s.bq : &s.cq;
            }
            *bucket *= powers[i].value;
        }
        if (!pairwise_coprime(s)) {
            throw std::logic_error("enumerated split violates pairwise coprimality");
        }
        out.push_back(s);

        // Odometer increment: last digit fastest, giving lexicographic order.
        std::size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] == 2) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
    return out;
}

namespace detail {

Verdict decide_roots_unchecked(const Params& params) {
    const IntPolynomial qpq = build_qpq(params);
    Verdict verdict;
    verdict.params = params;

    const auto splits = enumerate_splits(params);
    verdict.splits_checked = splits.size();
    for (const auto& split : splits) {
        if (split_residual(split) != 0) continue;
        const auto [pos, neg] = candidate_roots(split);
        for (const BigInt& t : {pos, neg}) {
            if (qpq.evaluate(t) != 0) {
                throw std::logic_error(
                    "split residual vanished but the candidate is not a root; "
                    "the residual transcription is inconsistent");
            }
        }
        verdict.satisfying_splits.push_back(split);
        verdict.witnesses.push_back(neg);
        verdict.witnesses.push_back(pos);
    }
    std::sort(verdict.witnesses.begin(), verdict.witnesses.end());
    verdict.witnesses.erase(std::unique(verdict.witnesses.begin(), verdict.witnesses.end()),
                            verdict.witnesses.end());
    verdict.has_integer_root = !verdict.witnesses.empty();
    return verdict;
}

}  // namespace detail

Verdict decide_roots(const Params& params) {
    params.require_decision_valid();
    return detail::decide_roots_unchecked(params);
}

}  // namespace cuboid

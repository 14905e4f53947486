#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cuboid/coeff_system.hpp"

namespace cuboid {

/// Six pairwise coprime bucket products with p = ap*bp*cp and q = aq*bq*cq.
/// Every prime power of p sits wholly in exactly one of ap, bp, cp (and
/// likewise for q): mixed exponent splits never need to be searched.
struct TripleSplit {
    std::int64_t ap = 1, bp = 1, cp = 1;
    std::int64_t aq = 1, bq = 1, cq = 1;
    bool operator==(const TripleSplit&) const = default;
};

/// One monomial of the split residual: coefficient * prod(var^exponent) with
/// the variables ordered (ap, bp, cp, aq, bq, cq).
struct ResidualTerm {
    int coefficient;
    std::array<unsigned, 6> exponents;
};

/// The 18-term table defining the split residual (nine positive-side terms
/// followed by the nine negated mirror-side terms).
std::span<const ResidualTerm> split_residual_terms();

/// LHS - RHS of the degree-10 root condition on a split, evaluated exactly.
/// Zero iff +-candidate_roots(split) are integer roots of Q_pq.
BigInt split_residual(const TripleSplit& split);

/// split_residual evaluated against an alternate term table. Exists so the
/// transcription-sensitivity tests can flip individual terms.
BigInt split_residual_with_terms(const TripleSplit& split, std::span<const ResidualTerm> terms);

/// The root hypothesis a0 = ap^2 cp aq^2 cq, b0 = bp^2 cp bq^2 cq.
/// Always satisfies a0 * b0 = p^2 q^2 for the split's params.
RootHypothesis hypothesis_from_split(const TripleSplit& split);

/// The candidate root pair (+a0, -a0).
std::pair<BigInt, BigInt> candidate_roots(const TripleSplit& split);

/// All 15 pairwise gcd conditions on the six bucket products.
bool pairwise_coprime(const TripleSplit& split);

/// All 3^(m+n) bucket assignments of the distinct prime powers of p and q,
/// in lexicographic order of the assignment vector (primes of p ascending,
/// then primes of q ascending; bucket order a < b < c). p = 1 or q = 1
/// contributes the single empty-product triple (1, 1, 1).
/// Requires positive coprime params; p = q = 1 is allowed here (the decision
/// entry point is stricter).
std::vector<TripleSplit> enumerate_splits(const Params& params);

/// Decision record for one parameter pair.
struct Verdict {
    Params params;
    bool has_integer_root = false;
    std::vector<BigInt> witnesses;  // sorted ascending; comes in +- pairs
    std::uint64_t splits_checked = 0;
    std::vector<TripleSplit> satisfying_splits;
};

/// Decides whether Q_pq has integer roots by enumerating all splits and
/// testing the split residual. Witnesses are re-verified by direct
/// evaluation of Q_pq before being reported. Rejects params unless
/// p, q >= 1, gcd(p, q) = 1 and p != q.
Verdict decide_roots(const Params& params);

namespace detail {
/// decide_roots without the p != q guard; used to exercise the root-found
/// path on construction-only inputs such as p = q = 1.
Verdict decide_roots_unchecked(const Params& params);
}  // namespace detail

}  // namespace cuboid
